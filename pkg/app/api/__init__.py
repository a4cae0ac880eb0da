"""API Module - Command handlers of the CLI."""
