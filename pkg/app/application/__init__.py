"""Application layer - use cases, DTOs, and orchestration logic"""
