#!/usr/bin/env python3
"""Regenerate the miniature WordNet-format database fixture.

Emits index.noun/data.noun/index.verb/data.verb under
src/lecturequiz/data/wordnet_mini/ in the standard WordNet 3.x flat
layout: every data line starts with its own byte offset, so the fixture
exercises the same parsing path as a full database. The noun graph has
two deliberately disconnected trees (entity vs foodstuff) so that
cross-tree similarities are zero.

    python tools/gen_wordnet_fixture.py
"""

from __future__ import annotations

import pathlib

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "lecturequiz" / "data" / "wordnet_mini"

# name -> (lemmas, hypernym names)
NOUNS = {
    "entity": (["entity"], []),
    "abstraction": (["abstraction"], ["entity"]),
    "measure": (["measure", "quantity"], ["abstraction"]),
    "cost": (["cost", "price", "toll"], ["measure"]),
    "loss": (["loss"], ["measure"]),
    "error": (["error", "mistake"], ["measure"]),
    "relation": (["relation"], ["abstraction"]),
    "function": (["function", "mapping"], ["relation"]),
    "attribute": (["attribute"], ["abstraction"]),
    "gradient": (["gradient", "slope"], ["attribute"]),
    "weight": (["weight"], ["attribute"]),
    "cognition": (["cognition", "knowledge"], ["abstraction"]),
    "algorithm": (["algorithm", "rule"], ["cognition"]),
    "model": (["model", "simulation"], ["cognition"]),
    "physical_entity": (["physical_entity"], ["entity"]),
    "object": (["object"], ["physical_entity"]),
    "artifact": (["artifact", "artefact"], ["object"]),
    "instrumentality": (["instrumentality"], ["artifact"]),
    "conveyance": (["conveyance", "transport"], ["instrumentality"]),
    "vehicle": (["vehicle"], ["conveyance"]),
    "wheeled_vehicle": (["wheeled_vehicle"], ["vehicle"]),
    "car": (["car", "auto", "automobile", "machine", "motorcar"], ["wheeled_vehicle"]),
    "bicycle": (["bicycle", "bike"], ["wheeled_vehicle"]),
    "device": (["device"], ["instrumentality"]),
    "computer": (["computer"], ["device"]),
    "network": (["network", "net"], ["device"]),
    "structure": (["structure", "construction"], ["artifact"]),
    # a second, disconnected hierarchy
    "foodstuff": (["foodstuff", "food_product"], []),
    "produce": (["produce", "green_goods"], ["foodstuff"]),
    "fruit": (["fruit"], ["produce"]),
    "banana": (["banana"], ["fruit"]),
    "apple": (["apple"], ["fruit"]),
    "vegetable": (["vegetable", "veggie"], ["produce"]),
}

VERBS = {
    "think": (["think", "cogitate"], []),
    "reason": (["reason"], ["think"]),
    "calculate": (["calculate", "compute", "reckon", "figure"], ["reason"]),
    "change": (["change", "alter"], []),
    "decrease": (["decrease", "diminish", "lessen", "fall"], ["change"]),
    "minimize": (["minimize", "minimise"], ["decrease"]),
    "shrink": (["shrink", "contract"], ["decrease"]),
    "increase": (["increase", "grow"], ["change"]),
    "maximize": (["maximize", "maximise"], ["increase"]),
    "move": (["move"], []),
    "travel": (["travel", "go"], ["move"]),
    "teach": (["teach", "instruct"], []),
    "train": (["train", "develop", "prepare"], ["teach"]),
}

HEADER = (
    "  1 Miniature WordNet-format database fixture. Layout follows the\n"
    "  2 standard wndb(5) flat-file format; offsets are true byte offsets.\n"
)


def build(pos_char: str, table: dict) -> tuple[str, str]:
    names = list(table)
    # data lines have fixed width fields, so offsets converge in one pass
    offsets: dict[str, int] = {}

    def data_line(name: str) -> str:
        lemmas, hypernyms = table[name]
        words = " ".join(f"{lemma} 0" for lemma in lemmas)
        ptrs = "".join(
            f" @ {offsets.get(h, 0):08d} {pos_char} 0000" for h in hypernyms
        )
        frames = " 01 + 02 00" if pos_char == "v" else ""
        gloss = f"fixture synset for {name}"
        return (
            f"{offsets.get(name, 0):08d} 03 {pos_char} {len(lemmas):02x} {words} "
            f"{len(hypernyms):03d}{ptrs}{frames} | {gloss}  \n"
        )

    pos = len(HEADER.encode())
    for name in names:
        offsets[name] = pos
        pos += len(data_line(name).encode())
    data = HEADER + "".join(data_line(name) for name in names)

    lemma_offsets: dict[str, list[int]] = {}
    for name in names:
        for lemma in table[name][0]:
            lemma_offsets.setdefault(lemma, []).append(offsets[name])
    index_lines = []
    for lemma in sorted(lemma_offsets):
        offs = lemma_offsets[lemma]
        has_hyper = any(
            table[name][1] and offsets[name] in offs for name in names
        )
        p_cnt = "1 @" if has_hyper else "0"
        joined = " ".join(f"{o:08d}" for o in offs)
        index_lines.append(
            f"{lemma} {pos_char} {len(offs)} {p_cnt} {len(offs)} 0 {joined}  \n"
        )
    index = HEADER + "".join(index_lines)
    return index, data


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for pos_char, table, base in (("n", NOUNS, "noun"), ("v", VERBS, "verb")):
        index, data = build(pos_char, table)
        (OUT / f"index.{base}").write_text(index, encoding="utf-8")
        (OUT / f"data.{base}").write_text(data, encoding="utf-8")
        print(f"{base}: {len(table)} synsets")


if __name__ == "__main__":
    main()
