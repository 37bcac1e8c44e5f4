"""Regenerates the synthetic corpus, word vectors and lexicons in this directory.

Output is fully determined by SEED; rerunning rewrites identical files.
"""

import random
import shutil
from pathlib import Path

SEED = 20240611
DIM = 10
HERE = Path(__file__).resolve().parent

TOPICS = {
    "flood": dict(
        nouns=["river", "levee", "rain", "water", "shelter", "bridge", "village", "rescue"],
        verbs=["rose", "broke", "flooded", "collapsed", "spread", "receded"],
        people=["Maria Lopez", "Governor Hale", "Captain Reyes"],
        places=["Dunmore", "the Ober valley", "Kessler county"],
    ),
    "election": dict(
        nouns=["vote", "ballot", "candidate", "party", "turnout", "poll", "campaign", "seat"],
        verbs=["won", "lost", "conceded", "surged", "declined", "rallied"],
        people=["Senator Park", "Anna Weiss", "Mayor Collins"],
        places=["Riverton", "the northern district", "Halden"],
    ),
    "quake": dict(
        nouns=["earthquake", "tremor", "building", "aftershock", "road", "hospital", "fault", "survivor"],
        verbs=["shook", "struck", "damaged", "cracked", "trapped", "destroyed"],
        people=["Dr Ito", "Chief Moreau", "Lena Brandt"],
        places=["Sarno", "the coastal region", "Velta"],
    ),
    "merger": dict(
        nouns=["merger", "company", "share", "deal", "investor", "market", "profit", "board"],
        verbs=["agreed", "rejected", "approved", "climbed", "fell", "announced"],
        people=["CEO Grant", "Paula Kim", "analyst Ruiz"],
        places=["New Harbor", "the stock exchange", "Lisbon"],
    ),
    "wildfire": dict(
        nouns=["fire", "smoke", "forest", "firefighter", "wind", "home", "evacuation", "acre"],
        verbs=["burned", "spread", "threatened", "destroyed", "contained", "jumped"],
        people=["Chief Dawson", "Ella Novak", "Ranger Singh"],
        places=["Pine Ridge", "the eastern slopes", "Carver"],
    ),
    "vaccine": dict(
        nouns=["vaccine", "trial", "dose", "patient", "virus", "clinic", "study", "infection"],
        verbs=["protected", "reduced", "showed", "doubled", "failed", "improved"],
        people=["Dr Okafor", "Professor Lind", "nurse Alvarez"],
        places=["Bergen", "the national lab", "Tamsin"],
    ),
}

FILLER = ["the", "a", "of", "in", "and", "to", "on", "by", "after", "with", "for", "at", "from",
          "said", "officials", "local", "people", "more", "than", "was", "were", "had", "has",
          "its", "their", "new", "late", "early", "week", "day", "night", "report", "many"]

TEMPLATES = [
    "{P} said the {n1} in {L} {v} after {k} days of {n2}.",
    "Officials in {L} reported that the {n1} {v} on {day}.",
    "The {n1} {v} and more than {k} {n2}s were affected.",
    "{P} warned that the {n2} could get worse by the end of the week.",
    "Many people in {L} said the {n1} was the worst they had seen.",
    "A report from {L} found that the {n2} {v} by {k} percent.",
    "Local groups set up a {n2} for families from {L}.",
    "The {n1} has {v} twice since {day}, {P} said.",
    "{P} thanked the {n2} teams for their work.",
    "Early estimates put the cost of the {n1} at {k} million dollars.",
    "In {L}, the {n2} {v} late at night.",
    "The {n1} and the {n2} remain the main concern for {P}.",
    "It was not clear when the {n2} would end.",
    "More than {k} {n1}s were reported across {L} on {day}.",
]

DAYS = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"]


def sentence(rng, topic):
    t = TOPICS[topic]
    tpl = rng.choice(TEMPLATES)
    n1, n2 = rng.sample(t["nouns"], 2)
    return tpl.format(
        P=rng.choice(t["people"]),
        L=rng.choice(t["places"]),
        n1=n1,
        n2=n2,
        v=rng.choice(t["verbs"]),
        k=rng.choice([2, 3, 5, 12, 40, 150, 2000]),
        day=rng.choice(DAYS),
    )


def cap(s):
    return s[0].upper() + s[1:]


def write_cluster(root, cid, topic, rng, n_docs=3, n_sents=12, n_refs=2):
    docs_dir = root / cid / "docs"
    refs_dir = root / cid / "refs"
    docs_dir.mkdir(parents=True)
    refs_dir.mkdir(parents=True)
    all_sents = []
    for d in range(n_docs):
        sents = [cap(sentence(rng, topic)) for _ in range(n_sents)]
        all_sents.extend(sents)
        # two sentences per line, so the splitter has real work to do
        lines = [" ".join(sents[i:i + 2]) for i in range(0, len(sents), 2)]
        (docs_dir / f"doc{d + 1}.txt").write_text("\n".join(lines) + "\n")
    for r in range(n_refs):
        picked = rng.sample(all_sents, 4)
        (refs_dir / f"ref{r + 1}.txt").write_text(" ".join(picked) + "\n")
    return all_sents


def vocabulary():
    words = set(FILLER) | {d.lower() for d in DAYS}
    for t in TOPICS.values():
        for key in ("nouns", "verbs"):
            for w in t[key]:
                words.add(w)
                words.add(w + "s")
        for key in ("people", "places"):
            for name in t[key]:
                words.update(name.lower().split())
    for tpl in TEMPLATES:
        for tok in tpl.replace(",", " ").replace(".", " ").split():
            if not tok.startswith("{"):
                words.add(tok.lower())
    words.update(["dollars", "percent", "million"])
    return sorted(words)


def main():
    rng = random.Random(SEED)
    for sub in ("train", "test"):
        shutil.rmtree(HERE / sub, ignore_errors=True)
    topics = list(TOPICS)
    for i, topic in enumerate(topics[:3]):
        write_cluster(HERE / "train", f"t{i + 1}_{topic}", topic, rng)
    for i, topic in enumerate(topics[3:]):
        write_cluster(HERE / "test", f"c{i + 1}_{topic}", topic, rng)

    centers = {t: [rng.gauss(0, 1) for _ in range(DIM)] for t in topics}
    topic_of = {}
    for t, words in TOPICS.items():
        for key in ("nouns", "verbs"):
            for w in words[key]:
                topic_of[w] = t
                topic_of[w + "s"] = t
    with open(HERE / "vectors.txt", "w") as f:
        for w in vocabulary():
            base = centers.get(topic_of.get(w), [0.0] * DIM)
            vec = [b + rng.gauss(0, 0.5) for b in base]
            f.write(w + " " + " ".join(f"{v:.4f}" for v in vec) + "\n")

    positive = ["won", "rescue", "protected", "improved", "contained", "thanked", "agreed", "approved", "profit"]
    negative = ["worst", "collapsed", "destroyed", "trapped", "failed", "lost", "damaged", "threatened", "fell"]
    with open(HERE / "sentiment.tsv", "w") as f:
        f.write("# token\tpositive\tnegative\n")
        for w in positive:
            f.write(f"{w}\t0.75\t0.0\n")
        for w in negative:
            f.write(f"{w}\t0.0\t0.625\n")
        f.write("report\t0.125\t0.125\n")

    nouns = sorted({n for t in TOPICS.values() for n in t["nouns"]})
    (HERE / "nouns.txt").write_text("\n".join(nouns) + "\n")

    (HERE / "example1.csv").write_text(
        "id,a1,a2,a3,decision\n"
        "x1,0,1,1,0\nx2,0,1,0,1\nx3,0,0,0,0\nx4,1,1,1,0\nx5,0,1,0,1\nx6,0,2,1,0\n"
    )


if __name__ == "__main__":
    main()
