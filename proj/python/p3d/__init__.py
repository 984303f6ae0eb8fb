"""3D plabic graphs, quivers and seeds of braid varieties."""

import json

from . import _p3d
from ._p3d import SCHEMA, BudgetExceeded, NotAdmissible, ParseError

__all__ = ["SCHEMA", "ParseError", "NotAdmissible", "BudgetExceeded",
           "parse", "seed", "moves", "count", "homfly", "verify_pc", "verify", "families"]


def parse(text, n=0):
    return json.loads(_p3d.parse(text, n))


def seed(text, n=0):
    return json.loads(_p3d.seed(text, n))


def moves(text, n=0):
    return json.loads(_p3d.moves(text, n))


def count(text, method="walk", q=0, budget=10_000_000, n=0):
    return json.loads(_p3d.count(text, method, q, budget, n))


def homfly(text, n=0):
    return json.loads(_p3d.homfly(text, n))


def verify_pc(text, n=0):
    return json.loads(_p3d.verify_pc(text, n))


def verify(text, family="halfarrow", n=0):
    return json.loads(_p3d.verify(text, family, n))


def families():
    return list(_p3d.families())
