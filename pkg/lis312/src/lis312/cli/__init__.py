from lis312.cli.commands import COMMANDS, CommandContext
from lis312.cli.parser import build_parser
from lis312.cli.pattern_spec import PatternSpec, parse_pattern

__all__ = ["COMMANDS", "CommandContext", "build_parser", "PatternSpec", "parse_pattern"]
