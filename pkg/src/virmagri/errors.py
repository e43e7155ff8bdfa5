"""Exception types shared across the package."""


class ParseError(ValueError):
    """An input text failed to parse.

    Carries the source text and the character position of the first
    offending token, both reflected in the message.
    """

    def __init__(self, message, text="", pos=None):
        if pos is not None:
            snippet = text[pos:pos + 12]
            message = f"{message} (at position {pos}: {snippet!r})"
        super().__init__(message)
        self.text = text
        self.pos = pos


class DomainError(ValueError):
    """An operation was invoked outside its stated domain, e.g. a
    quantization map at nonzero central charge."""
