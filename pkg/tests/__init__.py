# Tests for tvband
