"""Pipeline tests package initialization."""
