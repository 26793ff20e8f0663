"""Hand-annotated question-generation fixture.

Twenty-five sentences with the questions the rule table produces,
derived by hand from the documented rules (tag lexicon lookup, entity
spans, role assignment, replacement/inversion/do-support, and the
post-processing steps). EXPECTED maps each sentence to its (question,
model answer) pairs in emission order; sentences expected to produce
nothing (ineligible or entity-free) map to the empty list.
"""

SENTENCES_AND_EXPECTED = [
    (
        "Marie Curie discovered radium.",
        [
            ("Who discovered radium?", "Marie Curie"),
            ("What did Marie Curie discover?", "radium"),
        ],
    ),
    (
        "The model was trained in 2015.",
        [
            ("What was trained in 2015?", "The model"),
            ("When was the model trained?", "in 2015"),
        ],
    ),
    (
        "Gradient descent minimizes the cost function.",
        [
            ("What minimizes the cost function?", "Gradient descent"),
            ("What does gradient descent minimize?", "the cost function"),
        ],
    ),
    (
        "The network has three layers.",
        [
            ("What has three layers?", "The network"),
            ("How many layers does the network have?", "three layers"),
        ],
    ),
    (
        "Frank Rosenblatt introduced the perceptron in 1958.",
        [
            ("Who introduced the perceptron in 1958?", "Frank Rosenblatt"),
            ("What did Frank Rosenblatt introduce in 1958?", "the perceptron"),
            ("When did Frank Rosenblatt introduce the perceptron?", "in 1958"),
        ],
    ),
    (
        "Alan Turing worked in Cambridge.",
        [
            ("Who worked in Cambridge?", "Alan Turing"),
            ("Where did Alan Turing work?", "in Cambridge"),
        ],
    ),
    (
        "The network can approximate any function.",
        [
            ("What can approximate any function?", "The network"),
            ("What can the network approximate?", "any function"),
        ],
    ),
    (
        "It minimizes the loss.",
        [
            ("What does it minimize?", "the loss"),
        ],
    ),
    (
        "In 1898, Marie Curie discovered radium.",
        [
            ("When did Marie Curie discover radium?", "In 1898"),
            ("In 1898, who discovered radium?", "Marie Curie"),
            ("What did in 1898, Marie Curie discover?", "radium"),
        ],
    ),
    (
        "Twenty students attended the lecture.",
        [
            ("How many students attended the lecture?", "Twenty students"),
            ("What did twenty students attend?", "the lecture"),
        ],
    ),
    (
        "The algorithm was proposed by Karen Johnson in 1956.",
        [
            ("What was proposed by Karen Johnson in 1956?", "The algorithm"),
            ("Who was the algorithm proposed in 1956?", "by Karen Johnson"),
            ("When was the algorithm proposed by Karen Johnson?", "in 1956"),
        ],
    ),
    (
        "We train the model on many examples.",
        [
            ("What do we train on many examples?", "the model"),
            ("What do we train the model?", "on many examples"),
        ],
    ),
    (
        "Claude Shannon created information theory in 1948.",
        [
            ("Who created information theory in 1948?", "Claude Shannon"),
            ("What did Claude Shannon create in 1948?", "information theory"),
            ("When did Claude Shannon create information theory?", "in 1948"),
        ],
    ),
    (
        "The committee met in Geneva.",
        [
            ("What met in Geneva?", "The committee"),
            ("Where did the committee meet?", "in Geneva"),
        ],
    ),
    (
        "Deep networks require careful initialization.",
        [
            ("What require careful initialization?", "Deep networks"),
            ("What do deep networks require?", "careful initialization"),
        ],
    ),
    (
        "The optimizer can escape shallow local minima.",
        [
            ("What can escape shallow local minima?", "The optimizer"),
            ("What can the optimizer escape?", "shallow local minima"),
        ],
    ),
    (
        "Students should summarize the chapter before March 2021.",
        [
            ("What should summarize the chapter before March 2021?", "Students"),
            ("What should students summarize before March 2021?", "the chapter"),
            ("When should students summarize the chapter?", "before March 2021"),
        ],
    ),
    (
        "Dr. Hopfield trained the network.",
        [
            ("Who trained the network?", "Dr. Hopfield"),
            ("What did Dr. Hopfield train?", "the network"),
        ],
    ),
    (
        "The loss fell below one percent in December 2019.",
        [
            ("What fell below one percent in December 2019?", "The loss"),
            ("How many percent did the loss fall in December 2019?", "below one percent"),
            ("When did the loss fall below one percent?", "in December 2019"),
        ],
    ),
    (
        "The professor explained the theorem twice.",
        [
            ("What explained the theorem twice?", "The professor"),
            ("What did the professor explain twice?", "the theorem"),
        ],
    ),
    (
        "Everything happened very quickly.",
        [],  # eligible but entity-free
    ),
    (
        "What is a tensor?",
        [],  # interrogative, excluded
    ),
    (
        "Amazing.",
        [],  # too short, excluded
    ),
    (
        "The gradient of the loss function.",
        [],  # no finite verb, excluded
    ),
    (
        "A confusion matrix summarizes classification results.",
        [
            ("What summarizes classification results?", "A confusion matrix"),
            ("What does a confusion matrix summarize?", "classification results"),
        ],
    ),
]

# sentences whose candidates must carry the vague-pronoun flag
VAGUE_SENTENCES = {
    "It minimizes the loss.",
    "We train the model on many examples.",
}
