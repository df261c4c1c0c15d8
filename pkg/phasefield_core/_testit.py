def test(verbose=True, select=None):
    """
    Run the test suite and the docstring examples of the package.

    Parameters
    ----------
    verbose : bool
        Show per-test output. Defaults to ``True``.
    select : str, optional
        Keyword expression restricting the tests, as in ``pytest -k``.

    Returns
    -------
    int
        Exit code of pytest: ``0`` for success.
    """
    import pytest

    args = ["--doctest-modules", "--doctest-plus"]
    if not verbose:
        args.append("--quiet")
    if select is not None:
        args += ["-k", select]
    args += ["--pyargs", __name__.split(".")[0]]
    return pytest.main(args)
