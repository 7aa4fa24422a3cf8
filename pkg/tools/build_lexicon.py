#!/usr/bin/env python3
"""Regenerate src/reviewsum/data/sentiment_lexicon.txt from the word lists below.

Verb and noun bases get regular inflections generated; anything irregular is
listed explicitly. Run from the repository root:

    python tools/build_lexicon.py
"""

from __future__ import annotations

from pathlib import Path

STRONG_POS_ADJ = """
amazing awesome breathtaking magnificent stunning spectacular incredible
wonderful fantastic excellent superb marvelous marvellous majestic
unforgettable phenomenal outstanding brilliant perfect gorgeous beautiful
astonishing astounding exceptional extraordinary fabulous flawless glorious
grand heavenly immaculate impeccable iconic legendary mesmerizing
mindblowing miraculous paradisiacal peerless priceless remarkable splendid
sublime superlative supreme terrific thrilling unbeatable unbelievable
unmatched unparalleled unreal wondrous exquisite dazzling delightful divine
enchanting epic fascinating captivating charming dreamy idyllic inspiring
jawdropping lovely luxurious memorable mindboggling picturesque pristine
radiant regal serene soothing striking stupendous surreal timeless
transcendent unmissable uplifting vibrant world-class masterful monumental
awe-inspiring awestruck ecstatic elated euphoric overjoyed thrilled
""".split()

WEAK_POS_ADJ = """
good nice pleasant friendly helpful clean easy enjoyable fun interesting
impressive worthwhile scenic peaceful quiet relaxing comfortable convenient
affordable reasonable decent solid reliable safe smooth organized organised
informative knowledgeable courteous polite welcoming warm generous kind
attentive efficient quick fast handy spacious tidy neat fresh green lush
shady cool calm cozy cosy charming quaint authentic historic historical
cultural educational family-friendly accessible walkable cheap free
punctual professional skilled smart thoughtful cheerful happy glad pleased
satisfied content grateful thankful lucky keen eager rich colorful
colourful lively festive popular famous notable special unique varied
diverse plentiful ample genuine tasty delicious refreshing rewarding
respectful well-kept well-maintained well-organized well-preserved
recommended
""".split()

WEAK_NEG_ADJ = """
bad crowded busy long slow pricey overpriced costly noisy loud hot humid
cold wet rainy muddy dusty steep tiring exhausting confusing unclear
complicated awkward cramped narrow plain dull boring bland mediocre
ordinary average underwhelming disappointing touristy commercial tacky
pushy aggressive rude unfriendly unhelpful careless sloppy messy dirty
grimy smelly shabby rundown dated faded worn crumbling broken closed
limited scarce sparse inadequate insufficient uncomfortable inconvenient
unreliable erratic late delayed cancelled canceled packed congested hectic
chaotic stressful annoying irritating frustrating bothersome tedious
repetitive risky sketchy uneven slippery hazy foggy gloomy strict pesky
""".split()

STRONG_NEG_ADJ = """
terrible horrible awful dreadful appalling atrocious abysmal disgusting
revolting repulsive vile filthy horrendous horrid hideous miserable
unbearable intolerable insufferable outrageous scandalous shameful
disgraceful deplorable pathetic useless worthless pointless hopeless
dangerous unsafe frightening terrifying traumatic nightmarish ruined
unacceptable infuriating maddening offensive insulting dishonest corrupt
fraudulent criminal rotten wretched ghastly grim dire catastrophic
disastrous tragic heartbreaking
""".split()

# (word, valence) pairs that need no generated forms
EXPLICIT = [
    # comparatives / superlatives / irregular adjective forms
    ("better", 1), ("best", 2), ("finest", 2), ("greatest", 2),
    ("nicer", 1), ("nicest", 1), ("cleaner", 1), ("cleanest", 1),
    ("cheaper", 1), ("cheapest", 1), ("easier", 1), ("easiest", 1),
    ("friendlier", 1), ("friendliest", 1), ("prettier", 1), ("prettiest", 1),
    ("worse", -2), ("worst", -2), ("dirtier", -1), ("dirtiest", -1),
    ("slower", -1), ("slowest", -1), ("busier", -1), ("busiest", -1),
    ("great", 2), ("top", 1), ("ok", 1), ("okay", 1), ("fine", 1),
    ("pretty", 1), ("cute", 1), ("favorite", 1), ("favourite", 1),
    ("must-see", 2), ("must-visit", 2), ("five-star", 2), ("first-class", 2),
    ("one-of-a-kind", 2), ("once-in-a-lifetime", 2), ("bucket-list", 2),
    # nouns and interjections with clear polarity
    ("masterpiece", 2), ("gem", 2), ("wonder", 2), ("marvel", 2),
    ("paradise", 2), ("heaven", 2), ("highlight", 2), ("wow", 2),
    ("beauty", 1), ("bargain", 1), ("joy", 1), ("pleasure", 1),
    ("delight", 1), ("fun", 1), ("treat", 1), ("bonus", 1),
    ("hassle", -1), ("queue", -1), ("queues", -1), ("crowd", -1),
    ("crowds", -1), ("wait", -1), ("waits", -1), ("litter", -1),
    ("garbage", -1), ("trash", -1), ("graffiti", -1), ("smell", -1),
    ("stench", -2), ("scam", -2), ("scams", -2), ("ripoff", -2),
    ("rip-off", -2), ("tout", -1), ("touts", -1), ("pickpocket", -2),
    ("pickpockets", -2), ("theft", -2), ("thieves", -2), ("nightmare", -2),
    ("disaster", -2), ("mess", -1), ("trap", -1), ("con", -2),
    ("fraud", -2), ("insult", -2), ("shame", -1), ("pity", -1),
    ("letdown", -2), ("disappointment", -2), ("waste", -2),
    # adverbs not derivable from the adjective lists
    ("well", 1), ("smoothly", 1), ("highly", 1), ("greatly", 1),
    ("badly", -1), ("poorly", -1), ("barely", -1), ("sadly", -1),
    ("unfortunately", -1), ("regrettably", -1),
    # irregular verb forms (doubling or vowel change)
    ("stunned", 2), ("stuns", 2), ("ripped", -2), ("rips", -1),
    ("stole", -2), ("stolen", -2), ("overran", -1), ("overrun", -1),
    ("misled", -2), ("let-down", -2), ("worn-out", -1), ("sold-out", -1),
]

# verb bases: regular inflections (-s, -ed, -ing with final-e handling)
POS_VERBS_2 = "amaze astonish astound awe captivate dazzle delight enchant exceed impress inspire mesmerize overwhelm recommend treasure adore love".split()
POS_VERBS_1 = "enjoy like appreciate admire relax please satisfy smile help assist welcome entertain refresh reward care".split()
NEG_VERBS_1 = "annoy bore irritate frustrate tire exhaust confuse complain crowd delay rush disturb bother nag overcharge".split()
NEG_VERBS_2 = "disappoint disgust appall horrify ruin hate loathe dread despise regret deceive cheat harass threaten insult".split()

ADJ_WITH_LY = {
    "amazing": 2, "incredible": 2, "wonderful": 2, "beautiful": 2,
    "perfect": 2, "superb": 2, "magnificent": 2, "spectacular": 2,
    "stunning": 2, "breathtaking": 2, "absolute": 1, "pleasant": 1,
    "nice": 1, "comfortable": 1, "convenient": 1, "easy": 1, "quick": 1,
    "terrible": -2, "horrible": -2, "awful": -2, "dreadful": -2,
    "miserable": -2, "painful": -1, "annoying": -1, "disappointing": -2,
}


def verb_forms(base: str) -> list[str]:
    if base.endswith("e"):
        return [base, base + "s", base + "d", base[:-1] + "ing"]
    if base.endswith("y") and base[-2] not in "aeiou":
        return [base, base[:-1] + "ies", base[:-1] + "ied", base + "ing"]
    if base.endswith(("sh", "ch", "ss", "x")):
        return [base, base + "es", base + "ed", base + "ing"]
    return [base, base + "s", base + "ed", base + "ing"]


def adverb(adj: str) -> str:
    if adj.endswith("y") and adj[-2] not in "aeiou":
        return adj[:-1] + "ily"
    if adj.endswith("le"):
        return adj[:-1] + "y"
    return adj + "ly"


def build() -> dict[str, int]:
    lex: dict[str, int] = {}

    def put(word: str, valence: int):
        word = word.strip().lower()
        if word:
            lex[word] = valence

    for w in STRONG_POS_ADJ:
        put(w, 2)
    for w in WEAK_POS_ADJ:
        put(w, 1)
    for w in WEAK_NEG_ADJ:
        put(w, -1)
    for w in STRONG_NEG_ADJ:
        put(w, -2)
    for adj, v in ADJ_WITH_LY.items():
        put(adverb(adj), v)
    for base in POS_VERBS_2:
        for f in verb_forms(base):
            put(f, 2)
    for base in POS_VERBS_1:
        for f in verb_forms(base):
            put(f, 1)
    for base in NEG_VERBS_1:
        for f in verb_forms(base):
            put(f, -1)
    for base in NEG_VERBS_2:
        for f in verb_forms(base):
            put(f, -2)
    for w, v in EXPLICIT:
        put(w, v)
    return lex


NEGATIONS = """
not no never neither nor none nothing nobody nowhere hardly scarcely without
aint isnt arent wasnt werent dont doesnt didnt cant cannot couldnt wont
wouldnt shouldnt mustnt neednt havent hasnt hadnt lack lacks lacked lacking
""".split()


def main():
    out = Path(__file__).resolve().parents[1] / "src" / "reviewsum" / "data" / "sentiment_lexicon.txt"
    lex = build()
    lines = [
        "# Valence lexicon for the 0-4 polarity scorer. word<TAB>valence,",
        "# valence in {-2,-1,+1,+2}. Words are matched against lowercased,",
        "# punctuation-stripped tokens. Generated by tools/build_lexicon.py.",
    ]
    for word in sorted(lex):
        lines.append(f"{word}\t{lex[word]}")
    lines.append("[negations]")
    lines.extend(sorted(set(NEGATIONS)))
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lex)} entries + {len(set(NEGATIONS))} negations to {out}")


if __name__ == "__main__":
    main()
