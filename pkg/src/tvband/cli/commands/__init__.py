"""tvband subcommands; registered on the group in ``tvband.cli.main``."""
