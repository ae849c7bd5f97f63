class CrossCheckError(AssertionError):
    """Two routes that are proved to agree disagreed.

    Raised when an identity or an equivalence that holds by theorem fails
    on concrete data, which means a bug, not a property of the input.
    """
