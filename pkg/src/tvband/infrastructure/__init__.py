"""Infrastructure: configuration, logging, numerical solvers, storage."""
