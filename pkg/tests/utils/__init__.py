"""Utils tests package initialization."""
