# Use case tests
