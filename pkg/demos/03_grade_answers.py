"""Grade a batch of learner answers against a model answer.

Illustrates how the WordNet similarity behaves on paraphrases,
partial answers and noise, using the in-repo miniature database.
"""

from lecturequiz import feedback
from lecturequiz.wordnet import load_wordnet, resolve_wordnet_dir

graph = load_wordnet(resolve_wordnet_dir())

MODEL = "the cost function"
ANSWERS = [
    "the cost function",        # exact
    "cost function",            # minus the article
    "the price function",       # synonym via the graph
    "a function of the error",  # partial overlap
    "the gradient",             # related but wrong
    "bananas",                  # unrelated
    "",                         # empty
]

print(f"model answer: {MODEL!r}\n")
for answer in ANSWERS:
    result = feedback.grade(answer, MODEL, graph)
    matches = ", ".join(f"{w}→{m or '∅'}:{s:.2f}" for w, m, s in result.per_word)
    print(f"  {result.grade:<6} sim={result.similarity:.3f}  {answer!r}")
    if matches:
        print(f"         {matches}")
