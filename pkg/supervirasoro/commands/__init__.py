"""
命令处理器模块
"""

from typing import Dict, Type

from supervirasoro.commands.algebra_commands import (
    CheckAxiomsCommand,
    CheckCenterCommand,
    CheckGeneratorsCommand,
)
from supervirasoro.commands.automorphism_commands import AutCheckCommand, AutComposeCommand
from supervirasoro.commands.base import Command, CommandOptions
from supervirasoro.commands.cohomology_commands import CocycleCheckCommand, CocycleTrivializeCommand
from supervirasoro.commands.derivation_commands import DerivationCheckCommand, DerivationReduceCommand


COMMANDS: Dict[str, Type[Command]] = {
    cls.name: cls
    for cls in (
        CheckAxiomsCommand,
        CheckCenterCommand,
        CheckGeneratorsCommand,
        DerivationCheckCommand,
        DerivationReduceCommand,
        AutCheckCommand,
        AutComposeCommand,
        CocycleCheckCommand,
        CocycleTrivializeCommand,
    )
}


def get_command(name: str) -> Command:
    """
    Raises:
        KeyError: 未知命令
    """
    try:
        return COMMANDS[name]()
    except KeyError:
        raise KeyError(f"未知命令 {name!r}，可选: {', '.join(COMMANDS)}") from None


__all__ = [
    "COMMANDS",
    "Command",
    "CommandOptions",
    "get_command",
]
