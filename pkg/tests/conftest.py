"""Shared fixtures: config-file renditions of the built-in problems.

The expression strings below are kept in the exact shapes of the hard-coded
callables so that config-driven runs reproduce built-in runs bit for bit.
"""

import pytest

CONFIG_TEXTS = {
    1: """\
# decaying standing wave on [0, pi]
alpha = 4
beta = 2
domain = 0, pi
q = -2*exp(-t)*sin(x)
g1 = sin(x)
g2 = -sin(x)
g1x = cos(x)
bc = dirichlet
left = 0
right = 0
exact = exp(-t)*sin(x)
""",
    2: """\
alpha = 10
beta = 5
domain = 0, 2
q = 10*(1 + tan((x + t)/2)^2) + 25*tan((x + t)/2)
g1 = tan(x/2)
g2 = (1 + tan(x/2)^2)/2
g1x = (1 + tan(x/2)^2)/2
bc = dirichlet
left = tan(t/2)
right = tan((2 + t)/2)
exact = tan((x + t)/2)
""",
    3: """\
alpha = 0.5
beta = 1
domain = 0, 1
q = (2 - 2*t + t^2)*(x - x^2)*exp(-t) + 2*t^2*exp(-t)
g1 = 0
g2 = 0
g1x = 0
bc = dirichlet
left = 0
right = 0
exact = (x - x^2)*t^2*exp(-t)
""",
    4: """\
alpha = 6
beta = 2
domain = 0, 1
q = -12*sin(t)*sin(x) + 4*cos(t)*sin(x)
g1 = sin(x)
g2 = 0
g1x = cos(x)
bc = dirichlet
left = 0
right = cos(t)*sin(1)
exact = cos(t)*sin(x)
""",
    5: """\
alpha = 4
beta = 2
domain = 0, 2*pi
q = -2*exp(-t)*sin(x)
g1 = sin(x)
g2 = -sin(x)
g1x = cos(x)
bc = neumann
left = exp(-t)
right = exp(-t)
exact = exp(-t)*sin(x)
""",
}


@pytest.fixture
def config_texts():
    return CONFIG_TEXTS


@pytest.fixture
def write_config(tmp_path):
    """Write the config rendition of a built-in problem; returns its path."""

    def _write(problem_id, **overrides):
        lines = []
        for line in CONFIG_TEXTS[problem_id].splitlines():
            key = line.split("=")[0].strip()
            if key in overrides:
                value = overrides.pop(key)
                if value is None:
                    continue
                lines.append(f"{key} = {value}")
            else:
                lines.append(line)
        for key, value in overrides.items():
            if value is not None:
                lines.append(f"{key} = {value}")
        path = tmp_path / f"problem{problem_id}.cfg"
        path.write_text("\n".join(lines) + "\n")
        return str(path)

    return _write
