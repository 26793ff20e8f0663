#!/usr/bin/env python3
"""Regenerate the shipped textproc data tables.

Builds the word -> tag lexicon by expanding curated base lists (nouns,
verbs, adjectives) into their inflected forms, then writes the flat
files under src/lecturequiz/textproc/data/. Run from the repo root:

    python tools/gen_tag_lexicon.py
"""

from __future__ import annotations

import pathlib

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "lecturequiz" / "textproc" / "data"

# ---------------------------------------------------------------------------
# closed classes
# ---------------------------------------------------------------------------

DETERMINERS = """the a an this that these those some any no every each either neither
both all another such my your his its our their many few several""".split()

PREPOSITIONS = """of in on at by for with about against between into through during
before after above below from up down out off over under within without since until
to toward towards upon among across behind beyond near per than via onto inside outside
around along as like unlike despite throughout underneath beside besides amid except
regarding concerning versus""".split()

PRONOUNS = """i you he she it we they me him her us them mine yours hers ours theirs myself
yourself himself herself itself ourselves themselves who whom whose what which
something anything nothing everything someone anyone everyone nobody somebody
anybody everybody""".split()

MODALS = "can could may might must shall should will would".split()

# finite and non-finite forms of be, plus have/do auxiliaries used in
# question inversion; have/do main-verb readings are handled by qgen's
# irregular base-form table instead.
AUXILIARIES = "is are was were am be been being".split()

ADVERBS = """not very also often never always sometimes now then here there quite rather
too so just only more most less least well still already soon perhaps maybe
almost enough thus therefore however instead again once twice together apart
away back forward especially typically usually generally mainly mostly quickly
slowly carefully simply clearly directly easily exactly finally actually
really currently recently previously initially originally eventually
significantly approximately roughly first second namely moreover furthermore
nevertheless nonetheless otherwise hence meanwhile anyway indeed alone ahead
abroad everywhere somewhere anywhere nowhere later earlier today yesterday
tomorrow online offline respectively alternatively similarly likewise
accordingly consequently specifically particularly essentially basically
effectively formally informally iteratively analytically numerically
graphically visually manually automatically randomly uniformly independently
jointly separately strictly loosely roughly tightly gradually rapidly steadily
repeatedly frequently rarely seldom hardly nearly fully partially completely
entirely largely slightly somewhat""".split()

CONJUNCTIONS = "and or but nor yet while although though because if unless whereas whether".split()

NUMBER_WORDS = """zero one two three four five six seven eight nine ten eleven twelve
thirteen fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty
fifty sixty seventy eighty ninety hundred thousand million billion trillion dozen
half quarter""".split()

MONTHS = """January February March April May June July August September October
November December""".split()

# ---------------------------------------------------------------------------
# open classes (base forms)
# ---------------------------------------------------------------------------

NOUNS = """cat dog bird fish horse cow sheep mouse house room door window wall floor roof
table chair desk bed book page paper pen pencil letter word sentence paragraph
text story poem song music sound noise voice light color shape size length
width height depth weight mass volume area surface edge corner side top bottom
front middle center end beginning part piece bit whole half pair group set
list array stack queue tree node leaf root branch path route road street city
town village country state region zone border land ground earth soil rock
stone sand water river lake sea ocean wave rain snow ice cloud sky sun moon
star planet world universe space time day night morning evening afternoon week
month year decade century moment period instant hour minute second clock watch
calendar date event history future past present war peace law rule regulation
policy government power force energy heat temperature pressure speed velocity
acceleration motion movement direction position location place point line
curve circle square triangle rectangle angle degree radian axis plane grid
graph chart plot diagram figure picture image photo drawing map symbol sign
mark label tag name title heading caption legend number digit integer fraction
decimal ratio proportion percentage rate average mean median mode range
variance deviation distribution probability chance risk odds sample population
census survey research experiment test trial result outcome effect cause
reason purpose goal aim objective target plan strategy method approach
technique procedure process step stage phase level layer tier rank order
sequence series pattern trend cycle loop iteration recursion function equation
formula expression term factor coefficient variable constant parameter
argument value quantity amount sum total difference product quotient remainder
matrix vector scalar tensor dimension coordinate origin unit measure metric
score grade mark point credit prize reward penalty cost price fee charge
budget fund money cash coin currency dollar euro pound market trade business
company firm industry factory plant machine engine motor device tool
instrument apparatus equipment hardware software program code script routine
module package library framework system platform network internet web site
server client host user account profile password file folder directory
database record field column row table key index pointer reference address
memory storage disk drive cache buffer register processor computer laptop
phone tablet screen display monitor keyboard mouse button switch cable wire
signal message packet request response error bug fault failure crash warning
exception notice alert report summary overview review feedback comment note
remark question answer reply solution problem issue challenge task job work
duty role responsibility skill ability talent knowledge wisdom experience
practice habit custom tradition culture society community family parent child
son daughter brother sister friend neighbor colleague partner team member
leader manager boss employee worker staff crew student pupil teacher professor
instructor tutor mentor coach doctor nurse patient lawyer judge jury police
officer soldier guard driver pilot sailor farmer cook chef waiter artist
painter writer author poet musician singer actor dancer player coach referee
audience crowd public person people man woman boy girl adult baby human being
animal creature plant flower grass seed fruit apple banana orange grape lemon
vegetable potato tomato onion carrot bread cake rice meat beef chicken egg
milk cheese butter sugar salt pepper oil tea coffee juice wine beer bottle
glass cup plate bowl spoon fork knife bag box basket bucket container lid
cover sheet blanket pillow cloth fabric cotton wool silk leather shoe boot
sock shirt dress coat jacket hat cap glove belt pocket button zipper thread
needle scissors hammer nail screw bolt drill saw ladder rope chain lock key
door gate fence bridge tower building office school college university campus
classroom lecture lesson course curriculum subject topic theme chapter section
unit exam quiz assignment homework project thesis paper essay article journal
magazine newspaper media press radio television channel station film movie
video clip frame scene camera lens microphone speaker headphone volume
brightness contrast resolution pixel bitmap audio track subtitle caption
transcript speech talk presentation slide deck board chalk marker eraser
notebook binder science mathematics math physics chemistry biology geology
astronomy geography economics psychology sociology philosophy logic statistics
algebra geometry calculus arithmetic analysis theory theorem lemma proof axiom
hypothesis conjecture definition concept notion idea principle property
attribute feature characteristic aspect element component ingredient module
block brick foundation structure architecture design model prototype version
release update upgrade patch fix change modification revision draft copy
original duplicate backup archive collection gallery museum exhibit show
performance concert festival holiday vacation trip journey travel tour visit
guest host hotel restaurant menu dish meal breakfast lunch dinner snack
dessert taste flavor smell touch sight hearing sense feeling emotion mood joy
happiness sadness anger fear surprise disgust love hate hope despair courage
pride shame guilt stress pressure comfort relief pain injury wound disease
illness health medicine drug pill dose treatment therapy surgery hospital
clinic pharmacy ambulance emergency accident incident situation condition
circumstance context environment climate weather season spring summer autumn
winter storm thunder lightning wind breeze fog mist humidity drought flood
earthquake volcano mountain hill valley cliff cave forest wood jungle desert
island beach coast shore harbor port dock ship boat ferry canoe raft sail
anchor deck cabin crew cargo freight load truck car bus tram subway metro
bicycle bike motorcycle wheel tire brake pedal gear engine fuel gas petrol
diesel battery charger plug socket outlet circuit current voltage resistance
capacitor transistor diode chip board sensor actuator robot drone satellite
rocket missile spacecraft station orbit gravity field magnet pole charge
particle atom molecule electron proton neutron photon nucleus ion isotope
element compound mixture solution acid base salt metal iron steel copper gold
silver aluminum zinc lead tin carbon oxygen hydrogen nitrogen helium neon
gradient descent loss regression classification cluster clustering neuron
network layer weight bias activation epoch batch dataset data datum feature
label class prediction accuracy precision recall error residual optimizer
learning machine intelligence algorithm heuristic complexity entropy
information bit byte kilobyte megabyte gigabyte bandwidth latency throughput
protocol router firewall gateway node vertex edge degree neighbor component
tree forest heap hash bucket collision search sort merge partition pivot
threshold boundary segment region margin kernel filter convolution pooling
dropout normalization embedding token corpus vocabulary grammar syntax
semantics pragmatics morphology phonetics lexicon dictionary thesaurus
encyclopedia translation interpretation summary abstract introduction
conclusion appendix bibliography reference citation quote quotation excerpt
passage phrase clause subject object predicate verb noun adjective adverb
pronoun preposition conjunction interjection article determiner singular
plural tense aspect case gender agreement inflection derivation affix prefix
suffix stem morpheme radium uranium polonium physicist chemist biologist
mathematician scientist engineer researcher scholar laureate prize discovery
invention innovation patent award honor achievement contribution legacy impact
influence distance observation nonlinearity regularization backpropagation
perceptron workhorse overfitting""".split()

# nouns with irregular plurals; the regular "+s" rule is suppressed
IRREGULAR_PLURALS = {
    "child": "children", "man": "men", "woman": "women", "person": "people",
    "foot": "feet", "tooth": "teeth", "goose": "geese", "mouse": "mice",
    "datum": "data", "criterion": "criteria", "phenomenon": "phenomena",
    "analysis": "analyses", "basis": "bases", "thesis": "theses",
    "hypothesis": "hypotheses", "axis": "axes", "matrix": "matrices",
    "vertex": "vertices", "index": "indices", "radius": "radii",
    "nucleus": "nuclei", "syllabus": "syllabi", "life": "lives",
    "leaf": "leaves", "half": "halves", "knife": "knives", "wife": "wives",
    "shelf": "shelves", "wolf": "wolves", "sheep": "sheep", "fish": "fish",
    "series": "series", "species": "species",
}

VERBS = """accept achieve acquire act adapt add address adjust admit adopt advance advise
affect agree aggregate aim allocate allow analyze announce answer appear apply
appoint approach approve approximate argue arrange arrive ask assemble assess
assign assist assume attach attack attempt attend attract avoid backpropagate
balance base become begin behave believe belong benchmark bind blend block
boost borrow bound break bring broadcast build calculate call cancel capture
carry cause center challenge change check choose cite claim classify clean
clear click climb cluster collapse collect combine communicate compare compile
complete compress compute concatenate conclude configure confirm connect
consider consist constrain construct consume contain continue contribute
control converge convert convey convince cook copy correct correlate
correspond count cover crawl create cross debug decay decide declare decode
decompose decrease deduce define degrade delay delete deliver demonstrate
denote depend deploy derive descend describe deserve design detect determine
develop deviate differ differentiate diminish direct disagree disappear
discard discover discuss display distinguish distribute divide document
dominate double download draft drift drive drop duplicate earn edit educate
elaborate eliminate embed emerge emit emphasize employ enable encapsulate
encode encounter encourage enforce enhance enjoy enrich enroll ensure enter
enumerate equal equip escape establish estimate evaluate evolve examine exceed
exchange exclude execute exist expand expect experiment explain explore export
expose express extend extract facilitate factorize fail fetch fill filter find
finish fit fix flatten flip flow fluctuate focus fold follow forecast form
formulate forward frame gain gather generalize generate govern grade graduate
grant group grow guarantee guess guide handle happen help highlight hold hope
identify ignore illustrate imagine imitate implement imply import improve
include incorporate increase index indicate infer initialize inject insert
inspect install instantiate integrate intend interact interpolate interpret
interrupt introduce invert invest investigate invoke involve iterate join
judge jump justify keep label land launch layer lead learn lecture lend limit
link list listen live load locate lock log look loop lower maintain manage
manipulate map mark match maximize mean measure meet memorize mention merge
migrate minimize mix model moderate modify monitor motivate move multiply name
navigate need normalize note notice notify obey observe obtain occur offer
open operate optimize order organize orient originate oscillate outline
overcome overfit overlap override owe own pack paint parse participate
partition pass penalize perform permit persist pick plan play point populate
pose possess post postpone practice precede predict prefer prepare present
preserve press prevent print proceed process produce program progress project
promote prompt propagate propose protect prove provide publish pull push
quantify query queue quote raise randomize rank reach react read realize
rearrange reason rebuild recall receive recognize recommend recompute record
recover reduce refer refine reflect refresh regularize regress reject relate
release rely remain remember remind remove rename render repeat replace reply
report represent reproduce request require rescale research reserve reset
reshape resize resolve respond restart restore restrict result resume retain
retrain retrieve return reuse reveal reverse review revise reward rewrite
rotate round route run sample satisfy save scale scan schedule score scroll
search seem segment select sell send separate serialize serve settle shape
share shift ship show shrink shuffle signify simplify simulate sketch skip
smooth solve sort specify spend split spread stabilize stack stand standardize
start state stem stop store stream stress stretch structure study submit
subscribe substitute subtract succeed suffer suggest sum summarize supervise
supply support suppose suppress survey survive swap switch symbolize
synchronize synthesize tackle take talk teach tend terminate test thank think
threshold throw tokenize trace track train transcribe transfer transform
translate transmit transpose travel traverse treat trigger trim truncate trust
try tune turn type underfit underlie understand undo unify update upgrade
upload use utilize validate vanish vary verify view visit visualize vote wait
walk want warn wash watch wear weigh weight win wish wonder work wrap write
yield zoom discover sit sleep eat drink say tell speak spell feel fall fly
flee forget forgive freeze get give go hang have hear hide hit hurt know lay
leave let lie light lose make pay put quit ride ring rise see seek set shake
shine shoot shut sing sink slide speak spin spring steal stick sting strike
swear sweep swim swing tear wake bend bet bid blow burn burst buy catch choose
cling come creep cut deal dig do dream draw drive fight""".split()

# irregular verb conjugation: base -> (past, past participle)
IRREGULAR_VERBS = {
    "be": ("was", "been"), "become": ("became", "become"), "begin": ("began", "begun"),
    "bend": ("bent", "bent"), "bet": ("bet", "bet"), "bid": ("bid", "bid"),
    "bind": ("bound", "bound"), "blow": ("blew", "blown"), "break": ("broke", "broken"),
    "bring": ("brought", "brought"), "broadcast": ("broadcast", "broadcast"),
    "build": ("built", "built"), "burn": ("burnt", "burnt"), "burst": ("burst", "burst"),
    "buy": ("bought", "bought"), "catch": ("caught", "caught"), "choose": ("chose", "chosen"),
    "cling": ("clung", "clung"), "come": ("came", "come"), "cost": ("cost", "cost"),
    "creep": ("crept", "crept"), "cut": ("cut", "cut"), "deal": ("dealt", "dealt"),
    "dig": ("dug", "dug"), "do": ("did", "done"), "draw": ("drew", "drawn"),
    "dream": ("dreamt", "dreamt"), "drink": ("drank", "drunk"), "drive": ("drove", "driven"),
    "eat": ("ate", "eaten"), "fall": ("fell", "fallen"), "feel": ("felt", "felt"),
    "fight": ("fought", "fought"), "find": ("found", "found"), "flee": ("fled", "fled"),
    "fly": ("flew", "flown"), "forget": ("forgot", "forgotten"),
    "forgive": ("forgave", "forgiven"), "freeze": ("froze", "frozen"),
    "get": ("got", "gotten"), "give": ("gave", "given"), "go": ("went", "gone"),
    "grow": ("grew", "grown"), "hang": ("hung", "hung"), "have": ("had", "had"),
    "hear": ("heard", "heard"), "hide": ("hid", "hidden"), "hit": ("hit", "hit"),
    "hold": ("held", "held"), "hurt": ("hurt", "hurt"), "keep": ("kept", "kept"),
    "know": ("knew", "known"), "lay": ("laid", "laid"), "lead": ("led", "led"),
    "learn": ("learned", "learned"), "leave": ("left", "left"), "lend": ("lent", "lent"),
    "let": ("let", "let"), "lie": ("lay", "lain"), "light": ("lit", "lit"),
    "lose": ("lost", "lost"), "make": ("made", "made"), "mean": ("meant", "meant"),
    "meet": ("met", "met"), "overcome": ("overcame", "overcome"),
    "pay": ("paid", "paid"), "put": ("put", "put"), "quit": ("quit", "quit"),
    "read": ("read", "read"), "ride": ("rode", "ridden"), "ring": ("rang", "rung"),
    "rise": ("rose", "risen"), "run": ("ran", "run"), "say": ("said", "said"),
    "see": ("saw", "seen"), "seek": ("sought", "sought"), "sell": ("sold", "sold"),
    "send": ("sent", "sent"), "set": ("set", "set"), "shake": ("shook", "shaken"),
    "shine": ("shone", "shone"), "shoot": ("shot", "shot"), "show": ("showed", "shown"),
    "shrink": ("shrank", "shrunk"), "shut": ("shut", "shut"), "sing": ("sang", "sung"),
    "sink": ("sank", "sunk"), "sit": ("sat", "sat"), "sleep": ("slept", "slept"),
    "slide": ("slid", "slid"), "speak": ("spoke", "spoken"), "spell": ("spelt", "spelt"),
    "spend": ("spent", "spent"), "spin": ("spun", "spun"), "split": ("split", "split"),
    "spread": ("spread", "spread"), "spring": ("sprang", "sprung"),
    "stand": ("stood", "stood"), "steal": ("stole", "stolen"), "stick": ("stuck", "stuck"),
    "sting": ("stung", "stung"), "strike": ("struck", "struck"),
    "swear": ("swore", "sworn"), "sweep": ("swept", "swept"), "swim": ("swam", "swum"),
    "swing": ("swung", "swung"), "take": ("took", "taken"), "teach": ("taught", "taught"),
    "tear": ("tore", "torn"), "tell": ("told", "told"), "think": ("thought", "thought"),
    "throw": ("threw", "thrown"), "understand": ("understood", "understood"),
    "underlie": ("underlay", "underlain"), "wake": ("woke", "woken"),
    "wear": ("wore", "worn"), "win": ("won", "won"), "write": ("wrote", "written"),
}

# verbs whose final consonant doubles before -ed/-ing
DOUBLING = set("""plan stop drop map sum fit net pad wrap trim chop grab clip plug
scan skip step swap tag trap jog hug pin stir refer prefer occur submit permit
omit commit transmit admit regret equip plot log overlap flip stem ship""".split())

ADJECTIVES = """good bad big small large little long short tall high low wide narrow deep
shallow thick thin heavy light fast slow quick early late new old young
ancient modern recent current previous next last final initial original
primary secondary tertiary main major minor central local global national
international foreign domestic public private common rare frequent occasional
usual unusual normal abnormal regular irregular standard custom typical
atypical general specific particular special ordinary extraordinary simple
complex complicated easy hard difficult tough soft smooth rough flat steep
level even odd equal unequal same different similar distinct unique identical
equivalent opposite reverse inverse direct indirect positive negative neutral
active passive static dynamic stable unstable constant variable fixed flexible
rigid strict loose tight free busy empty full partial complete incomplete
whole broken solid liquid hollow dense sparse rich poor cheap expensive
valuable worthless useful useless helpful harmful safe dangerous secure risky
certain uncertain sure unsure likely unlikely possible impossible probable
improbable necessary unnecessary essential optional important unimportant
significant insignificant relevant irrelevant suitable unsuitable appropriate
inappropriate correct incorrect right wrong true false accurate inaccurate
precise imprecise exact approximate fine coarse clear unclear obvious subtle
explicit implicit visible invisible apparent hidden open closed available
unavailable present absent ready unready willing unwilling able unable capable
incapable efficient inefficient effective ineffective productive powerful weak
strong feeble robust fragile durable brittle elastic plastic smart clever
intelligent wise foolish stupid dumb bright dull sharp blunt keen eager
enthusiastic reluctant hesitant confident nervous anxious calm quiet loud
silent noisy peaceful violent gentle fierce kind cruel friendly hostile polite
rude honest dishonest loyal faithful reliable unreliable responsible careless
careful cautious reckless brave cowardly proud humble modest arrogant selfish
generous greedy jealous envious grateful thankful happy sad glad sorry angry
furious upset pleased satisfied disappointed surprised amazed astonished
shocked scared afraid fearful terrified worried concerned curious interested
bored boring interesting exciting thrilling tedious tiresome fun funny
humorous serious grave solemn formal informal casual official unofficial legal
illegal lawful unlawful fair unfair just unjust moral immoral ethical
unethical pure impure clean dirty fresh stale rotten ripe raw cooked sweet
sour bitter salty spicy bland tasty delicious healthy unhealthy sick ill well
fit unfit tired exhausted energetic lively alive dead living extinct natural
artificial synthetic organic inorganic physical mental chemical biological
electrical mechanical digital analog electronic optical acoustic thermal
nuclear solar lunar linear nonlinear quadratic cubic exponential logarithmic
polynomial trigonometric algebraic geometric arithmetic numeric numerical
symbolic logical rational irrational real imaginary discrete continuous finite
infinite bounded unbounded convergent divergent monotonic periodic random
deterministic stochastic statistical probabilistic empirical theoretical
practical analytical neural convolutional recurrent sequential parallel
distributed concurrent synchronous asynchronous optimal suboptimal minimal
maximal supervised unsupervised reinforcement overfitted underfitted trained
untrained iterative recursive heuristic exhaustive brute binary ternary
decimal hexadecimal octal boolean scalar vectorized matrix orthogonal
orthonormal diagonal symmetric asymmetric singular invertible semidefinite
convex concave differentiable integrable separable independent dependent joint
marginal conditional prior posterior bayesian frequentist parametric
nonparametric sensitive vague ambiguous definite indefinite abstract concrete
virtual actual potential kinetic close squared""".split()

GIVEN_NAMES = """Aaron Adam Alan Albert Alexander Alice Amanda Amy Andrea Andrew
Angela Ann Anna Anne Anthony Arthur Barbara Benjamin Betty Beverly Billy Bobby
Bradley Brandon Brenda Brian Bruce Bryan Carl Carol Carolyn Catherine Charles
Charlotte Cheryl Christian Christina Christine Christopher Cynthia Daniel David
Deborah Debra Dennis Diana Diane Donald Donna Dorothy Douglas Dylan Edward
Elizabeth Emily Emma Eric Ethan Eugene Evelyn Frances Frank Gabriel Gary George
Gerald Gloria Grace Gregory Hannah Harold Harry Heather Helen Henry Howard Isaac
Isabella Jack Jacob Jacqueline James Janet Janice Jason Jean Jeffrey Jennifer
Jeremy Jerry Jesse Jessica Joan Joe John Jonathan Jordan Jose Joseph Joshua Joyce
Juan Judith Judy Julia Julie Justin Karen Katherine Kathleen Kathryn Keith Kelly
Kenneth Kevin Kimberly Kyle Larry Laura Lauren Lawrence Linda Lisa Logan Louis
Louise Madison Margaret Maria Marie Marilyn Mark Martha Mary Matthew Megan
Melissa Michael Michelle Nancy Natalie Nathan Nicholas Nicole Noah Olivia Pamela
Patricia Patrick Paul Peter Philip Rachel Ralph Randy Raymond Rebecca Richard
Robert Roger Ronald Rose Roy Russell Ruth Ryan Samantha Samuel Sandra Sara Sarah
Scott Sean Sharon Shirley Sophia Stephanie Stephen Steven Susan Teresa Terry
Theresa Thomas Timothy Tyler Victoria Vincent Virginia Walter Wayne William
Willie Zachary Ada Alan Grace Marie Pierre Isaac Ivan Igor Chen Wei Li Ming
Raj Priya Arjun Ravi Anjali Hiro Yuki Kenji Fatima Omar Ali Hassan Leila Claude""".split()

HONORIFICS = """Dr. Dr Mr. Mr Mrs. Mrs Ms. Ms Prof. Prof Professor Doctor Sir Dame
Lord Lady Madam President Dean Chancellor Captain Colonel General Reverend
Father Sister Saint St. St""".split()

LOCATIONS = """Africa America Antarctica Asia Australia Europe Argentina Austria
Bangladesh Belgium Brazil Canada Chile China Colombia Cuba Denmark Egypt England
Ethiopia Finland France Germany Ghana Greece Hungary Iceland India Indonesia
Iran Iraq Ireland Israel Italy Japan Jordan Kenya Korea Mexico Morocco Nepal
Netherlands Nigeria Norway Pakistan Peru Philippines Poland Portugal Romania
Russia Scotland Singapore Spain Sweden Switzerland Thailand Turkey Ukraine
Vietnam Wales Amsterdam Athens Bangalore Bangkok Barcelona Beijing Berlin Boston
Cairo Calcutta Cambridge Chennai Chicago Delhi Dublin Edinburgh Geneva Hyderabad
Istanbul Jakarta Karachi Kolkata Lagos Lahore Lisbon London Madrid Manila
Melbourne Moscow Mumbai Munich Nairobi Osaka Oxford Paris Prague Pune Rome
Seattle Seoul Shanghai Stockholm Sydney Taipei Tehran Tokyo Toronto Venice
Vienna Warsaw Washington Zurich Lonere Raigad""".split()

# scientist surnames common in lecture material, shipped as proper nouns
SURNAMES = """Einstein Newton Turing Bayes Gauss Euler Shannon Hinton Fourier
Lagrange Markov Gibbs Pearson Fisher Darwin Pasteur Tesla Edison Faraday Maxwell
Planck Bohr Heisenberg Fermi Feynman Hawking Ramanujan Nash Neumann Hilbert
Cauchy Riemann Laplace Bernoulli Boltzmann Kepler Galileo Copernicus Hubble
Mendel Watson Crick Franklin Goodfellow Bengio LeCun Vapnik Rosenblatt McCulloch
Pitts Widrow Hopfield Kohonen Minsky Papert Samuel Mitchell Jordan Ng""".split()

ABBREVIATIONS = """Dr. Mr. Mrs. Ms. Prof. Sr. Jr. St. No. Fig. Figs. Eq. Eqs. Sec.
fig. eq. sec. i.e. e.g. etc. vs. cf. al. approx. resp. Ph.D. a.m. p.m. U.S. U.K.""".split()

STOPWORDS = """a about above after again against all am an and any are as at be
because been before being below between both but by cannot could did do does
doing down during each few for from further had has have having he her here hers
herself him himself his how i if in into is it its itself just me more most my
myself no nor not of off on once only or other our ours ourselves out over own
same she should so some such than that the their theirs them themselves then
there these they this those through to too under until up very was we were what
when where which while who whom why will with would you your yours yourself
yourselves shall may might must don't doesn't isn't aren't wasn't weren't won't
wouldn't couldn't shouldn't can't it's that's there's""".split()


def _third_person(verb: str) -> str:
    if verb.endswith("y") and len(verb) > 1 and verb[-2] not in "aeiou":
        return verb[:-1] + "ies"
    if verb.endswith(("s", "sh", "ch", "x", "z", "o")):
        return verb + "es"
    return verb + "s"


def _past(verb: str) -> str:
    if verb.endswith("e"):
        return verb + "d"
    if verb.endswith("y") and len(verb) > 1 and verb[-2] not in "aeiou":
        return verb[:-1] + "ied"
    if verb in DOUBLING:
        return verb + verb[-1] + "ed"
    return verb + "ed"


def _gerund(verb: str) -> str:
    if verb.endswith("ie"):
        return verb[:-2] + "ying"
    if verb.endswith("e") and not verb.endswith(("ee", "oe", "ye")):
        return verb[:-1] + "ing"
    if verb in DOUBLING:
        return verb + verb[-1] + "ing"
    return verb + "ing"


def _plural(noun: str) -> str:
    if noun in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[noun]
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    if noun.endswith(("s", "sh", "ch", "x", "z")):
        return noun + "es"
    return noun + "s"


def build_lexicon() -> dict[str, str]:
    lex: dict[str, str] = {}

    def put(word: str, tag: str) -> None:
        lex.setdefault(word, tag)

    for w in DETERMINERS:
        put(w, "DT")
    for w in PREPOSITIONS:
        put(w, "IN")
    for w in PRONOUNS:
        put(w, "PRP")
    for w in MODALS:
        put(w, "MD")
    for w in AUXILIARIES:
        put(w, "AUX")
    put("has", "VBZ")
    put("have", "VBP")
    put("had", "VBD")
    put("do", "VBP")
    put("does", "VBZ")
    put("did", "VBD")
    for w in ADVERBS:
        put(w, "RB")
    for w in CONJUNCTIONS:
        put(w, "OTHER")
    for w in NUMBER_WORDS:
        put(w, "CD")
    for w in MONTHS:
        put(w, "NNP")

    # nouns first so noun/verb homographs read as nouns; verb-primary
    # words simply do not appear in NOUNS
    for w in NOUNS:
        put(w, "NN")
        put(_plural(w), "NNS")
    for w in VERBS:
        put(w, "VBP")
        put(_third_person(w), "VBZ")
        if w in IRREGULAR_VERBS:
            past, part = IRREGULAR_VERBS[w]
            put(past, "VBD")
            if part != past:
                put(part, "VBN")
        else:
            put(_past(w), "VBD")
        put(_gerund(w), "VBG")
    for w in ADJECTIVES:
        put(w, "JJ")
        if not w.endswith("ly"):
            if w.endswith("y") and len(w) > 2 and w[-2] not in "aeiou":
                put(w[:-1] + "ily", "RB")
            elif w.endswith("le") and len(w) > 3:
                put(w[:-1] + "y", "RB")
            elif w.endswith("ic"):
                put(w + "ally", "RB")
            else:
                put(w + "ly", "RB")
    # homographs where the verb reading serves the pipeline better
    for w, tag in (("means", "VBZ"), ("measures", "VBZ"), ("averages", "VBZ"),
                   ("shows", "VBZ"), ("stacks", "VBZ")):
        lex[w] = tag
    for w in GIVEN_NAMES + SURNAMES + LOCATIONS:
        put(w, "NNP")
    for w in HONORIFICS:
        put(w, "NNP")
    return lex


def build_base_forms() -> dict[str, str]:
    """Inflected form -> base form, for do-support question building."""
    table: dict[str, str] = {}

    def put(form: str, base: str) -> None:
        table.setdefault(form, base)

    put("is", "be")
    put("are", "be")
    put("was", "be")
    put("were", "be")
    put("am", "be")
    put("has", "have")
    put("had", "have")
    put("does", "do")
    put("did", "do")
    for w in VERBS:
        put(_third_person(w), w)
        if w in IRREGULAR_VERBS:
            past, part = IRREGULAR_VERBS[w]
            put(past, w)
            put(part, w)
        else:
            put(_past(w), w)
    return table


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    lex = build_lexicon()
    with open(OUT / "tag_lexicon.tsv", "w", encoding="utf-8") as fh:
        for word in sorted(lex):
            fh.write(f"{word}\t{lex[word]}\n")
    with open(OUT / "stopwords.txt", "w", encoding="utf-8") as fh:
        fh.write("\n".join(sorted(set(STOPWORDS))) + "\n")
    with open(OUT / "given_names.txt", "w", encoding="utf-8") as fh:
        fh.write("\n".join(sorted(set(GIVEN_NAMES))) + "\n")
    with open(OUT / "honorifics.txt", "w", encoding="utf-8") as fh:
        fh.write("\n".join(sorted(set(HONORIFICS))) + "\n")
    with open(OUT / "locations.txt", "w", encoding="utf-8") as fh:
        fh.write("\n".join(sorted(set(LOCATIONS))) + "\n")
    with open(OUT / "abbreviations.txt", "w", encoding="utf-8") as fh:
        fh.write("\n".join(sorted(set(ABBREVIATIONS))) + "\n")
    base = build_base_forms()
    with open(OUT / "irregular_verbs.tsv", "w", encoding="utf-8") as fh:
        for form in sorted(base):
            fh.write(f"{form}\t{base[form]}\n")
    print(f"lexicon entries: {len(lex)}")
    print(f"base-form entries: {len(base)}")


if __name__ == "__main__":
    main()
