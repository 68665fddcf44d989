RESULTS: dict[str, tuple[bool, str]] = {}
