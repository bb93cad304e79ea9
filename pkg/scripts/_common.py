import argparse
import dataclasses
import json
import os
import typing


def parse_config(cls, description):
    """Expose every field of a config dataclass as a command-line option."""
    parser = argparse.ArgumentParser(description=description)
    parser.add_argument("--out", help="write the JSON report here as well as to stdout")
    hints = typing.get_type_hints(cls)
    for f in dataclasses.fields(cls):
        flag = "--" + f.name.replace("_", "-")
        hint = hints[f.name]
        if hint is bool:
            parser.add_argument(flag, action=argparse.BooleanOptionalAction, default=f.default)
        elif typing.get_origin(hint) is tuple:
            item = typing.get_args(hint)[0]
            parser.add_argument(flag, nargs="+", type=item, default=f.default)
        else:
            parser.add_argument(flag, type=int if hint is int else str, default=f.default)
    args = vars(parser.parse_args())
    out = args.pop("out")
    cfg = cls(**{k: tuple(v) if isinstance(v, list) else v for k, v in args.items()})
    return cfg, out


def emit(report, out):
    text = json.dumps(report, indent=2, ensure_ascii=False)
    print(text)
    if out:
        os.makedirs(os.path.dirname(out) or ".", exist_ok=True)
        with open(out, "w") as fh:
            fh.write(text + "\n")
