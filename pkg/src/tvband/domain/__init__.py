"""Domain types, records, schemas and errors."""
