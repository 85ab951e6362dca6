"""Data Transfer Objects for application layer"""
