"""Config tests package initialization."""
