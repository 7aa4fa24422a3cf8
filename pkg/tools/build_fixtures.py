#!/usr/bin/env python3
"""Regenerate the shipped review fixtures under data/fixtures/.

Two files come out of this, both deterministic (fixed seed):

  demo_reviews.jsonl    two places, ~70 reviews, ~200 sentences; the text mixes
                        aspect-flavored positive/negative sentences so scoring,
                        fairness, and redundancy all have something to do.
  landmarks_reviews.jsonl  seven places x 1000 reviews with exact per-place
                        female/male counts for the dataset-statistics check.

Run from the repository root:  python tools/build_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

OUT_DIR = Path(__file__).resolve().parents[1] / "data" / "fixtures"

PLACE_NOUNS = {
    "taj-mahal": {
        "noun": "marble mausoleum",
        "spot": "the reflecting pool",
        "city": "Agra",
        "transport": "rickshaw",
    },
    "petra": {
        "noun": "rock-cut treasury",
        "spot": "the siq canyon",
        "city": "Wadi Musa",
        "transport": "shuttle",
    },
}

# {adj} slots get one of the listed alternatives so most realized
# sentences are distinct and the redundancy penalty sees near-duplicates
POSITIVE = [
    ("The {noun} is absolutely {adj} at sunrise.", ["stunning", "breathtaking", "magnificent", "gorgeous"]),
    ("Our guide was {adj} and shared fascinating stories about the history.", ["friendly", "knowledgeable", "patient", "cheerful"]),
    ("Entry tickets were {adj} and worth every penny.", ["cheap", "affordable", "reasonable"]),
    ("Photography near {spot} is {adj} in the early morning light.", ["amazing", "wonderful", "spectacular"]),
    ("The architecture is a {adj} piece of heritage.", ["magnificent", "splendid", "remarkable", "glorious"]),
    ("Walking through {spot} was a {adj} and unforgettable experience.", ["peaceful", "serene", "delightful"]),
    ("Local food stalls outside the gate were {adj} and affordable.", ["delicious", "tasty", "fresh"]),
    ("The views from the far terrace are {adj}.", ["breathtaking", "incredible", "superb", "lovely"]),
    ("Staff at the information desk were {adj} and polite.", ["helpful", "courteous", "welcoming"]),
    ("The whole site is remarkably {adj} and well-kept.", ["clean", "tidy", "pristine"]),
    ("An easy {adj} ride from {city} and the entrance signs are clear.", ["taxi", "bus", "train"]),
    ("The evening light show was a {adj} surprise.", ["wonderful", "charming", "memorable"]),
    ("Hiring a {adj} guide made the culture come alive.", ["knowledgeable", "skilled", "professional"]),
    ("The carvings are {adj} and beautifully preserved.", ["exquisite", "striking", "impressive"]),
    ("Skip-the-line tickets made access {adj} and painless.", ["quick", "fast", "easy"]),
]

NEGATIVE = [
    ("The crowds were {adj} by noon.", ["unbearable", "awful", "exhausting", "dreadful"]),
    ("Touts hassle you {adj} near the exit.", ["constantly", "aggressively", "relentlessly"]),
    ("Tickets felt {adj} for foreign visitors.", ["overpriced", "expensive", "pricey"]),
    ("The queue at the gate was {adj} slow and confusing.", ["terribly", "painfully", "miserably"]),
    ("Vendors inside were {adj} and annoying.", ["pushy", "aggressive", "rude"]),
    ("The toilets were {adj} and poorly maintained.", ["dirty", "filthy", "smelly"]),
    ("Parking was a {adj} mess and the road in is awful.", ["chaotic", "hectic", "stressful"]),
    ("The heat was {adj} and there is hardly any shade.", ["exhausting", "unbearable", "brutal"]),
    ("Our {adj} from {city} was late and the transport options are unreliable.", ["bus", "train", "shuttle"]),
    ("Loud tour groups ruined the {adj} atmosphere.", ["peaceful", "quiet", "calm"]),
    ("The audio guide was a {adj} waste of money.", ["useless", "pointless", "terrible"]),
    ("Food near the entrance was {adj} and expensive.", ["bland", "mediocre", "disappointing"]),
    ("Security screening was {adj} and frustrating.", ["disorganized", "slow", "chaotic"]),
    ("Half of {spot} was closed with no {adj} or refund.", ["warning", "notice", "explanation"]),
]

NEUTRAL = [
    ("We visited in {adj} with the whole family.", ["July", "August", "March", "October"]),
    ("The site opens at {adj} in the morning.", ["six", "seven", "eight"]),
    ("You can buy tickets online or at the gate.", [""]),
    ("The walk from the car park takes about {adj} minutes.", ["twenty", "fifteen", "thirty"]),
    ("Guides wait near the main entrance.", [""]),
]

USERNAMES = [
    "wanderer", "trailmix", "cityhopper", "sunchaser", "mapreader",
    "lategate", "earlybird", "packlight", "slowcoach", "daytripper",
]


def realize(template_pool, index, rng, words) -> str:
    template, options = template_pool[index]
    choice = options[int(rng.integers(0, len(options)))]
    return template.format(adj=choice, **words)


def build_demo(rng: np.random.Generator) -> list[dict]:
    records = []
    for place, words in PLACE_NOUNS.items():
        genders = ["F"] * 15 + ["M"] * 18 + ["U"] * 2
        rng.shuffle(genders)
        for i, gender in enumerate(genders):
            n_sent = int(rng.integers(2, 5))
            lean_positive = rng.uniform() < 0.6
            pool = POSITIVE if lean_positive else NEGATIVE
            other = NEGATIVE if lean_positive else POSITIVE
            picks = list(rng.choice(len(pool), size=min(n_sent - 1, len(pool)), replace=False))
            sentences = [realize(pool, k, rng, words) for k in picks]
            if rng.uniform() < 0.5:
                sentences.append(realize(other, int(rng.integers(0, len(other))), rng, words))
            else:
                sentences.append(realize(NEUTRAL, int(rng.integers(0, len(NEUTRAL))), rng, words))
            order = list(rng.permutation(len(sentences)))
            text = " ".join(sentences[k] for k in order)
            likes = int(rng.integers(0, 40))
            if rng.uniform() < 0.15:
                likes += int(rng.integers(60, 200))
            records.append(
                {
                    "id": f"{place}-{i:03d}",
                    "place": place,
                    "text": text,
                    "rating": int(rng.integers(4, 6)) if lean_positive else int(rng.integers(1, 4)),
                    "likes": likes,
                    "username": f"{USERNAMES[i % len(USERNAMES)]}{i}",
                    "gender": gender,
                    "country": None,
                }
            )
    return records


LANDMARK_ROWS = [
    ("roman-colosseum", 492, 508),
    ("christ-the-redeemer", 445, 555),
    ("machu-picchu", 456, 544),
    ("petra", 439, 561),
    ("taj-mahal", 398, 602),
    ("chichen-itza", 482, 518),
    ("great-wall-of-china", 452, 548),
]

SHORT_TEXTS = [
    "Amazing place. Well worth the trip!",
    "Crowded but beautiful. Go early.",
    "The guide was helpful and the views were stunning.",
    "Overpriced tickets. Long queues everywhere.",
    "A wonderful piece of history. Loved it.",
    "Too hot at midday. Take water.",
    "Great photos from the upper path.",
    "Vendors are pushy near the gate.",
    "Unforgettable sunrise. Highly recommended.",
    "The food nearby was cheap and tasty.",
    "Transport from the city was easy.",
    "Disappointing maintenance. Litter everywhere.",
]


def build_landmarks() -> list[dict]:
    records = []
    for place, female, male in LANDMARK_ROWS:
        genders = ["F"] * female + ["M"] * male
        for i, gender in enumerate(genders):
            records.append(
                {
                    "id": f"{place}-{i:04d}",
                    "place": place,
                    "text": SHORT_TEXTS[(i * 7) % len(SHORT_TEXTS)],
                    "rating": (i % 5) + 1,
                    "likes": (i * 13) % 97,
                    "username": f"{USERNAMES[i % len(USERNAMES)]}{i}",
                    "gender": gender,
                }
            )
    return records


def write_jsonl(records: list[dict], path: Path):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
    print(f"wrote {len(records)} records to {path}")


def main():
    rng = np.random.default_rng(99173)
    write_jsonl(build_demo(rng), OUT_DIR / "demo_reviews.jsonl")
    write_jsonl(build_landmarks(), OUT_DIR / "landmarks_reviews.jsonl")


if __name__ == "__main__":
    main()
