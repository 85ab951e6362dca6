"""Domain layer - core business logic and entities"""
