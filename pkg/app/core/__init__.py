"""
Core module containing shared kernel components:
- Exceptions
- Settings
- Dependency Injection Container
"""
