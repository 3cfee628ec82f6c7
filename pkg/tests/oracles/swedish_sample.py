"""Deterministic >=10k-word Swedish sample list for stemmer checks.

Three honest strata: inflected paradigm forms over a realistic stem list
(including -at/-ad stems whose definite forms are known non-fixed-points of
the single-pass algorithm), a block of common words taken verbatim, and
seeded random letter strings over the Swedish alphabet.
"""

import random

STEMS = """
hund katt hus bil bok flicka pojke kvinna man barn dag natt vecka tid stad
land skog sjö berg väg gata torg skola kyrka affär fabrik kontor rum kök dörr
fönster bord stol säng lampa bild färg ljus mörker vatten eld luft jord sten
träd blomma gräs löv frukt äpple päron potatis bröd mjölk ost kött fisk fågel
häst ko gris får get räv varg björn älg ekorre mus råtta orm groda automat
soldat kamrat advokat diplomat demokrat byråkrat kandidat resultat kamerad
maskin telefon dator radio bänk penna papper tavla krita lärare elev läkare
polis bonde arbetare chef direktör kung drottning prins prinsessa riddare
krig fred kärlek hat glädje sorg rädsla mod hopp dröm tanke idé ord mening
språk röst ljud musik sång dans teater film konst målning dikt saga historia
framtid år månad minut sekund timme morgon kväll middag frukost lunch kaffe
te socker salt peppar krydda smak lukt känsla syn hörsel vinter sommar höst
vår snö regn sol måne stjärna himmel moln vind storm åska blixt regnbåge
frost is värme kyla grad väder klimat miljö natur djur växt liv död födelse
bröllop fest present gåva krans ring halsband armband klocka spegel kam
borste tvål handduk kläder skjorta byxa kjol klänning strumpa sko stövel
hatt mössa vante halsduk jacka rock päls knapp ficka bälte väska ryggsäck
plånbok nyckel lås port trappa hiss våning källare tak vägg golv jakt
jaktkarl bygg handel vänskap frihet sanning nyhet svaghet möjlighet klok
snabb långsam vacker ful stor liten gammal ung ny tjock smal bred hög låg
djup grund varm kall het sval stark svag hård mjuk tung lätt mörk ren
smutsig torr våt full tom rik fattig billig dyr enkel svår rolig tråkig glad
ledsen arg rädd trött pigg hungrig mätt törstig frisk sjuk vänlig farlig
viktig riktig tydlig möjlig vanlig särskild allmän öppen stängd fri upptagen
arbeta spela läsa skriva tala lyssna springa simma hoppa flyga köra åka resa
bo leva älska hata tänka tro veta känna se höra lukta smaka röra bära lyfta
dra skjuta kasta fånga bygga riva skapa förstöra öppna stänga börja sluta
vinna förlora köpa sälja betala spara ge ta låna hjälpa störa fråga svara
berätta visa gömma hitta tappa glömma minnas vänta skynda stanna
""".split()

SUFFIXES = [
    "", "a", "an", "ar", "arna", "arnas", "ars", "as", "ade", "ades", "ande",
    "andet", "are", "aren", "arens", "arne", "ast", "aste", "at", "e", "en",
    "ens", "er", "erna", "ernas", "ers", "es", "et", "ets", "or", "orna",
    "ornas", "ors", "s", "t", "het", "heten", "hetens", "heter", "heterna",
    "lig", "liga", "ligt", "else", "elsen", "elser", "fullt", "löst",
]

COMMON_WORDS = """
och det att i en jag hon som han på den med var sig för så till är men ett
om hade de av icke mig du henne då sin nu har inte hans honom skulle hennes
där min man ej vid kunde något från ut när efter upp vi dem vara vad över än
dig kan sina här ha mot alla under någon eller allt mycket sedan ju denna
själv detta åt utan varit hur ingen mitt ni bli blev oss din dessa några
deras blir mina samma vilken er sådan vår blivit dess inom mellan sådant
varför varje vilka ditt vem vilket sitta sådana vart dina vars vårt våra
ert era vilkas jaktkarlarne jaktkarlens klokt friskt fräckt byggde hunden
huset flickorna äpplet stolt inflytande uppstickare betydelse regeringens
universitetet studenterna professorerna bibliotekets tidningarna
""".split()

SWEDISH_LETTERS = "abcdefghijklmnopqrstuvwxyzåäö"


_VOWELS = "aeiouyåäö"


def _attach(stem: str, suffix: str) -> str:
    # Swedish drops a stem-final vowel before a vowel-initial ending
    # (flicka + or -> flickor), so generated forms stay plausible.
    if suffix and stem[-1] in _VOWELS and suffix[0] in _VOWELS:
        return stem[:-1] + suffix
    return stem + suffix


def build_sample(seed: int = 20260808, n_random: int = 2500) -> list[str]:
    words = set()
    for stem in STEMS:
        for suffix in SUFFIXES:
            words.add(_attach(stem, suffix))
    words.update(COMMON_WORDS)
    rng = random.Random(seed)
    while len(words) < len(STEMS) * 10 + n_random:
        length = rng.randint(2, 14)
        words.add("".join(rng.choice(SWEDISH_LETTERS) for _ in range(length)))
    return sorted(words)
