#!/usr/bin/env python3
"""Regenerates include/football/builtin_scenarios.hpp.

Positions are absolute pitch coordinates; the left team attacks toward x = +1.
"""
import pathlib

BASE = [("Keeper", -0.96, 0.0), ("Defender", -0.70, -0.28), ("Defender", -0.74, -0.09),
        ("Defender", -0.74, 0.09), ("Defender", -0.70, 0.28), ("Midfielder", -0.42, -0.28),
        ("Midfielder", -0.45, -0.09), ("Midfielder", -0.45, 0.09), ("Midfielder", -0.42, 0.28),
        ("Forward", -0.15, -0.10), ("Forward", -0.15, 0.10)]
KICKOFF = BASE[:9] + [("Forward", -0.06, -0.12), ("Forward", -0.01, 0.0)]


def fmt(v):
    v = round(v, 6) + 0.0
    s = repr(v)
    return s[:-2] if s.endswith(".0") else s


def players(side, rows, mirror=False):
    out = []
    for role, x, y in rows:
        if mirror:
            x, y = -x, -y
        out.append(f"{side}_player = {role} {fmt(x)} {fmt(y)}")
    return out


def scenario(name, header, left, right):
    lines = [f"name = {name}"] + header + left + right
    return "\n".join(lines) + "\n"


BENCH_FLAGS = ["duration_frames = 3000", "stochastic = true", "end_on_score = false",
               "end_on_possession_loss = false", "end_on_out_of_play = false",
               "start_mode = KickOff", "ball = 0 0"]

scenarios = []
for name, theta in (("11_vs_11_easy", "0.05"), ("11_vs_11_medium", "0.6"), ("11_vs_11_hard", "0.95")):
    scenarios.append(scenario(name, BENCH_FLAGS + [f"difficulty = {theta}"],
                              players("left", KICKOFF), players("right", BASE, mirror=True)))

ACADEMY = ["duration_frames = 400", "difficulty = 0.6"]
OUR_KEEPER = [("Keeper", -0.96, 0.0)]
FAR_DEFENDER = [("Defender", -0.9, 0.4)]
CHASERS = [("Defender", -0.10, -0.12), ("Defender", -0.10, 0.12), ("Defender", -0.15, 0.0),
           ("Defender", -0.20, -0.24), ("Defender", -0.20, 0.24)]
THEIR_KEEPER = [("Keeper", 0.96, 0.0)]

scenarios.append(scenario("empty_goal_close", ACADEMY + ["ball = 0.75 0"],
                          players("left", OUR_KEEPER + [("Forward", 0.74, 0.0)]),
                          players("right", FAR_DEFENDER)))
scenarios.append(scenario("empty_goal", ACADEMY + ["ball = 0.01 0"],
                          players("left", OUR_KEEPER + [("Forward", 0.0, 0.0)]),
                          players("right", FAR_DEFENDER)))
scenarios.append(scenario("run_to_score", ACADEMY + ["ball = 0.01 0"],
                          players("left", OUR_KEEPER + [("Forward", 0.0, 0.0)]),
                          players("right", CHASERS)))
scenarios.append(scenario("run_to_score_with_keeper", ACADEMY + ["ball = 0.01 0"],
                          players("left", OUR_KEEPER + [("Forward", 0.0, 0.0)]),
                          players("right", THEIR_KEEPER + CHASERS)))
scenarios.append(scenario("pass_and_shoot_with_keeper", ACADEMY + ["ball = 0.71 -0.28"],
                          players("left", OUR_KEEPER + [("Forward", 0.70, -0.28), ("Forward", 0.70, 0.0)]),
                          players("right", THEIR_KEEPER + [("Defender", 0.74, -0.25)])))
scenarios.append(scenario("run_pass_and_shoot_with_keeper", ACADEMY + ["ball = 0.71 -0.28"],
                          players("left", OUR_KEEPER + [("Forward", 0.70, -0.28), ("Forward", 0.70, 0.0)]),
                          players("right", THEIR_KEEPER + [("Defender", 0.74, 0.03)])))
scenarios.append(scenario("3_vs_1_with_keeper", ACADEMY + ["ball = 0.61 0"],
                          players("left", OUR_KEEPER + [("Forward", 0.62, -0.2), ("Forward", 0.60, 0.0),
                                                        ("Forward", 0.62, 0.2)]),
                          players("right", THEIR_KEEPER + [("Defender", 0.72, 0.0)])))

CORNER_LEFT = [("Keeper", -0.96, 0.0), ("Defender", -0.5, -0.2), ("Defender", -0.5, 0.2),
               ("Defender", -0.1, -0.2), ("Defender", -0.1, 0.2), ("Midfielder", 0.6, -0.3),
               ("Midfielder", 0.6, 0.0), ("Midfielder", 0.75, -0.15), ("Midfielder", 0.75, 0.15),
               ("Forward", 0.85, 0.05), ("Forward", 0.98, 0.4)]
CORNER_RIGHT = [("Keeper", 0.96, 0.0), ("Defender", 0.85, -0.1), ("Defender", 0.85, 0.1),
                ("Defender", 0.8, -0.2), ("Defender", 0.8, 0.2), ("Midfielder", 0.7, -0.25),
                ("Midfielder", 0.7, 0.0), ("Midfielder", 0.7, 0.25), ("Midfielder", 0.9, 0.3),
                ("Forward", 0.3, -0.1), ("Forward", 0.3, 0.1)]
scenarios.append(scenario("corner", ACADEMY + ["ball = 1 0.42", "start_mode = Corner",
                                               "end_on_possession_loss = false"],
                          players("left", CORNER_LEFT), players("right", CORNER_RIGHT)))

COUNTER_LEFT = [("Keeper", -0.96, 0.0), ("Midfielder", 0.32, -0.22), ("Forward", 0.36, 0.0),
                ("Midfielder", 0.32, 0.22), ("Forward", 0.45, 0.12), ("Defender", -0.6, -0.25),
                ("Defender", -0.62, -0.08), ("Defender", -0.62, 0.08), ("Defender", -0.6, 0.25),
                ("Midfielder", -0.2, -0.15), ("Midfielder", -0.2, 0.15)]
COUNTER_BACK = [("Defender", -0.05, -0.3), ("Defender", -0.05, 0.3), ("Defender", -0.1, -0.1),
                ("Midfielder", -0.1, 0.1), ("Midfielder", -0.25, -0.2), ("Midfielder", -0.25, 0.2),
                ("Midfielder", -0.3, 0.0), ("Forward", -0.45, -0.1), ("Forward", -0.45, 0.1)]
scenarios.append(scenario("counterattack_easy", ACADEMY + ["ball = 0.37 0"],
                          players("left", COUNTER_LEFT),
                          players("right", THEIR_KEEPER + [("Defender", 0.7, 0.0)] + COUNTER_BACK)))
scenarios.append(scenario("counterattack_hard", ACADEMY + ["ball = 0.37 0"],
                          players("left", COUNTER_LEFT),
                          players("right", THEIR_KEEPER + [("Defender", 0.7, -0.08), ("Defender", 0.7, 0.08)]
                                  + COUNTER_BACK[:-1])))
scenarios.append(scenario("11_vs_11_with_lazy_opponents",
                          ["duration_frames = 3000", "difficulty = 0.6", "lazy_opponents = true",
                           "ball = -0.73 -0.09"],
                          players("left", BASE), players("right", BASE, mirror=True)))

out = ["#pragma once", "",
       "// Generated by scripts/gen_builtin_scenarios.py; edit the script, not this file.",
       "// Each entry is a scenario document in the key = value format read by parse_scenario().",
       "", "#include <array>", "#include <string_view>", "", "namespace football::builtin_data {", "",
       "struct Entry {", "  std::string_view name;", "  std::string_view text;", "};", "",
       f"inline constexpr std::array<Entry, {len(scenarios)}> kScenarios = {{{{"]
for text in scenarios:
    name = text.split("\n", 1)[0].split("= ")[1]
    out.append(f'    {{"{name}", R"scn(')
    out.append(text + ')scn"},')
out += ["}};", "", "}  // namespace football::builtin_data", ""]
path = pathlib.Path(__file__).resolve().parent.parent / "include/football/builtin_scenarios.hpp"
path.write_text("\n".join(out))
