"""Pass/fail reports shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckItem:
    label: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        mark = "ok" if self.ok else "FAIL"
        return f"[{mark}] {self.label}" + (f": {self.detail}" if self.detail else "")


@dataclass
class CheckReport:
    """A named list of checks.  ``regime`` marks a documented special case
    (for example a characteristic where an identity is known to degenerate)."""

    title: str
    items: list[CheckItem] = field(default_factory=list)
    regime: str | None = None

    def add(self, label: str, ok: bool, detail: str = "") -> CheckItem:
        item = CheckItem(label, bool(ok), detail)
        self.items.append(item)
        return item

    @property
    def ok(self) -> bool:
        return all(i.ok for i in self.items)

    @property
    def failures(self) -> list[CheckItem]:
        return [i for i in self.items if not i.ok]

    @property
    def witness(self) -> CheckItem | None:
        f = self.failures
        return f[0] if f else None

    def __bool__(self):
        return self.ok

    def __str__(self):
        head = f"{self.title}: {'PASS' if self.ok else 'FAIL'}"
        if self.regime:
            head += f" ({self.regime})"
        return "\n".join([head] + ["  " + i.line() for i in self.items])
