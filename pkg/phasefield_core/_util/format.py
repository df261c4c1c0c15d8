def format_object(obj, params, attrs=None):
    """
    Render ``Type(k=v, ...)`` followed by indented named values.
    """
    if attrs is None:
        attrs = []
    tname = type(obj).__name__
    kwargs_input = [f"{arg}={val}" for arg, val in params.items()]
    msg = f"{tname}({', '.join(kwargs_input)})"

    for name, value in attrs:
        msg += "\n" + _format_named_value(name, value)
    return msg


def _format_named_value(name, value):
    from textwrap import TextWrapper

    lines = str(value).split("\n")
    prefix = f"  {name}: "
    head = TextWrapper(initial_indent=prefix, subsequent_indent=" " * len(prefix))
    msg = head.fill(lines[0])
    indent = " " * len(prefix)
    for line in lines[1:]:
        msg += "\n" + indent + line
    return msg
