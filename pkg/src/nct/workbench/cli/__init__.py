from .RunConfig import RunConfig
from .inputs import Context, declared_universe, load_context, load_quotient
from .commands import build_parser, render, run, main
