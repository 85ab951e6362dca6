"""Infrastructure layer - external services and persistence"""
