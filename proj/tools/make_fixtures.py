#!/usr/bin/env python3
"""Regenerates the recorded fixture sites under tests/fixtures/.

Outputs:
  tests/fixtures/sites/golden/      recorded pages for four synthetic archives
  tests/fixtures/golden_config.json crawl and analysis config for those sites
  tests/fixtures/bias_rows_published.csv  published reference bias rows

Every output is deterministic; rerunning the script reproduces identical
bytes. The four sites exercise one pagination strategy each, plus the
awkward cases a real crawl hits: a duplicate link across pages, an
over-long article, a PDF, a javascript shell, an empty extraction, an
unparseable date, a windows-1252 page and an undeclared encoding.
"""

import json
import shutil
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "tests" / "fixtures"
SITE_DIR = FIXTURES / "sites" / "golden"
FETCHED_AT = "2024-01-15T12:00:00Z"


def fnv1a64_hex(text: str) -> str:
    h = 0xCBF29CE484222325
    for b in text.encode("utf-8"):
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return f"{h:016x}"


assert fnv1a64_hex("") == "cbf29ce484222325"
assert fnv1a64_hex("a") == "af63dc4c8601ec8c"
assert fnv1a64_hex("foobar") == "85944171f73967e8"


def record(url, body, content_type="text/html; charset=utf-8", status=200,
           encoding="utf-8"):
    stem = fnv1a64_hex(url)
    meta = {
        "content_type": content_type,
        "encoding": encoding,
        "fetched_at": FETCHED_AT,
        "status": status,
        "url": url,
    }
    (SITE_DIR / f"{stem}.json").write_bytes(
        (json.dumps(meta, indent=2, sort_keys=True) + "\n").encode("utf-8"))
    if isinstance(body, str):
        body = body.encode("utf-8")
    (SITE_DIR / f"{stem}.body").write_bytes(body)


def article_html(masthead, title, paragraphs, *, charset="utf-8",
                 declare_charset=True):
    meta = f'<meta charset="{charset}">' if declare_charset else ""
    body = "\n".join(f"    <p>{p}</p>" for p in paragraphs)
    return f"""<!DOCTYPE html>
<html>
<head><title>{title} | {masthead}</title>{meta}</head>
<body>
<article>
  <h1 class="headline">{title}</h1>
  <div class="article-body">
{body}
  </div>
</article>
<footer>{masthead}</footer>
</body>
</html>
"""


# ---------------------------------------------------------------------------
# ashford: NavBarMax. Six numbered pages inferred from the nav bar.

ASH_BASE = "https://ashford.example"

# slug -> (listing date, title, paragraphs)
ASH_ARTICLES = {
    "ash-01": ("January 15, 2024",
               "Ashford debate team wins exchange with partners in India",
               ["The Ashford debate team returned from a two week exchange "
                "across India with a win at the closing tournament. Coaches "
                "praised the format and called the partnership a clear "
                "success.",
                "Students described the visit as a great chance to build "
                "lasting friendships. Organizers hope to repeat the exchange "
                "next year."]),
    "ash-02": ("January 16, 2024",
               "Panel weighs supply chain risk as China tariffs loom",
               ["A campus panel warned that new tariffs on goods from China "
                "could hurt small college suppliers. One economist said the "
                "risk of a prolonged dispute remains high.",
                "Not every speaker shared the worry. A visiting fellow argued "
                "that trade would stay strong and that fear of a breakdown "
                "was overstated."]),
    "ash-03": ("January 18, 2024",
               "Lecture series opens with talk on Israel election season",
               ["The politics department opened its spring lecture series "
                "with a talk on the election season in Israel. The speaker "
                "described deep tension between rival blocs and no easy path "
                "to a stable coalition.",
                "Students asked about the danger of another early vote. The "
                "speaker said the outcome was impossible to call."]),
    "ash-04": ("January 20, 2024",
               "Student groups host aid drive for Palestine relief",
               ["Three student groups joined to host an aid drive for relief "
                "work in Palestine. Organizers said the response was strong "
                "and thanked donors for their support.",
                "The drive will run through the end of the month. A final "
                "tally will be published in the spring report."]),
    "ash-05": ("January 22, 2024",
               "India infrastructure review stretches into a fourth week",
               None),  # body generated below, deliberately over 500 tokens
    "ash-06": ("January 25, 2024",
               "Library renovation enters second phase",
               ["Crews closed the east reading room this week as the library "
                "renovation entered its second phase. The project remains on "
                "schedule, according to the facilities office.",
                "Study space has been relocated to the annex. The main "
                "stacks stay open during regular hours."]),
    "ash-07": ("February 10, 2024",
               "Visiting scholar surveys monsoon research in India",
               ["A visiting scholar presented a decade of monsoon research "
                "from India on Tuesday. She warned that late rains raise the "
                "risk of crop failure in some districts.",
                "The talk ended on a hopeful note. New forecasting tools "
                "have improved planning, she said, and harvests have grown "
                "more stable."]),
    "ash-08": ("February 12, 2024",
               "Language exchange with China doubles enrollment",
               ["The language exchange with partner schools in China doubled "
                "its enrollment this spring. Faculty celebrated the growth "
                "and praised student interest.",
                "Administrators credit the program's success to new "
                "scholarships. A fall info session is planned."]),
    "ash-09": ("February 14, 2024",
               "Campus café reopens with late hours",
               ["The campus café reopened this week with late hours and "
                "a new crème menu. Early reviews were happy ones, with "
                "lines out the door.",
                "Managers said the café will keep the longer schedule "
                "through finals."]),
    "ash-10": ("February 16, 2024",
               "Alumni panel debates startup scene in Israel",
               ["Four alumni joined a panel on the startup scene in Israel. "
                "They described strong growth in security software and "
                "praised the local talent pool.",
                "One panelist warned that funding could weaken if regional "
                "tension rises. Others were more hopeful."]),
    "ash-11": ("February 19, 2024",
               "Intramural season opens on new turf field",
               ["The intramural season opened Saturday on the new turf "
                "field. Captains called the surface a clear benefit after "
                "years of mud.",
                "League play runs through May. Standings will post weekly."]),
    "ash-12": ("February 21, 2024",
               "Film series screens new documentaries from India",
               ["The spring film series opens with three new documentaries "
                "from India. The curator praised the slate as the strongest "
                "in years.",
                "Screenings are free for students. A director talkback "
                "follows the final film."]),
    "ash-13": ("March 11, 2024",
               "Researchers fear data gap after China archive closure",
               ["Two Ashford researchers said the closure of a digital "
                "archive in China could hurt ongoing dissertations. Losing "
                "the records would be a bad setback, one said.",
                "The library is negotiating mirror access. There is no "
                "timeline yet."]),
    "ash-14": ("March 12, 2024",
               "Forum on Israel and Palestine draws record crowd",
               ["A moderated forum on Israel and Palestine drew a record "
                "crowd to the main hall. Speakers disagreed sharply but kept "
                "the exchange calm and earned praise for it.",
                "Organizers called the turnout a success. A second session "
                "is planned for April."]),
    "ash-15": ("March 14, 2024",
               "Dining hall pilots late night menu",
               ["The dining hall will pilot a late night menu during exams. "
                "The plan follows a student survey last fall.",
                "If demand holds, the menu becomes permanent in the fall."]),
    "ash-16": ("March 18, 2024",
               "Economics club tracks India market rally",
               ["The economics club spent the week tracking a market rally "
                "in India. Members called the gains great news for their "
                "mock portfolio.",
                "The club meets Thursdays. New members are welcome."]),
    "ash-17": ("March 20, 2024",
               "Orchestra announces spring tour dates",
               ["The orchestra announced six spring tour dates across the "
                "region. The director said ticket demand has been strong.",
                "A campus send off concert is set for March 30."]),
}

# Pages of three; page 6 repeats ash-01 so the crawl must dedupe it.
ASH_PAGES = [
    ["ash-01", "ash-02", "ash-03"],
    ["ash-04", "ash-05", "ash-06"],
    ["ash-07", "ash-08", "ash-09"],
    ["ash-10", "ash-11", "ash-12"],
    ["ash-13", "ash-14", "ash-15"],
    ["ash-16", "ash-17", "ash-01"],
]


def ashford_long_body():
    words = ["the", "committee", "reviewed", "plans", "for", "regional",
             "transit", "covering", "costs", "timelines", "permits", "and",
             "vendors"]
    sentences = []
    for i in range(42):
        rotated = words[i % len(words):] + words[:i % len(words)]
        sentences.append(" ".join(rotated).capitalize() + ".")
    opener = ("The review of infrastructure partnerships with India "
              "stretched into a fourth week with no vote scheduled.")
    return [opener + " " + " ".join(sentences[:14]),
            " ".join(sentences[14:28]),
            " ".join(sentences[28:])]


def ashford_listing(items):
    rows = "\n".join(
        f'  <div class="item">\n'
        f'    <a href="/articles/{slug}">{ASH_ARTICLES[slug][1]}</a>\n'
        f'    <span class="posted">{ASH_ARTICLES[slug][0]}</span>\n'
        f'  </div>'
        for slug in items)
    nav = "\n".join(f'  <a href="/news?page={n}">{n}</a>' for n in range(1, 7))
    return f"""<!DOCTYPE html>
<html>
<head><title>Ashford Courier news archive</title><meta charset="utf-8"></head>
<body>
<header><h1>Ashford Courier</h1></header>
<div class="article-list">
{rows}
</div>
<nav class="pagination">
{nav}
</nav>
</body>
</html>
"""


def emit_ashford():
    record(f"{ASH_BASE}/news", ashford_listing(ASH_PAGES[0]))
    for n, items in enumerate(ASH_PAGES, start=1):
        record(f"{ASH_BASE}/news?page={n}", ashford_listing(items))
    for slug, (_, title, paragraphs) in ASH_ARTICLES.items():
        url = f"{ASH_BASE}/articles/{slug}"
        if slug == "ash-05":
            paragraphs = ashford_long_body()
        if slug == "ash-09":
            page = article_html("Ashford Courier", title, paragraphs,
                                charset="windows-1252")
            record(url, page.encode("cp1252"),
                   content_type="text/html; charset=windows-1252",
                   encoding="windows-1252")
        else:
            record(url, article_html("Ashford Courier", title, paragraphs))


# ---------------------------------------------------------------------------
# brookfield: UrlTemplate. Four pages; page five is empty and ends the walk.

BRK_BASE = "https://brookfield.example"
BRK_HEADER = "Brookfield Daily wire report."
BRK_FOOTER = "Copyright 2024 Brookfield Daily. All rights reserved."

BRK_ARTICLES = {
    "brk-01": ("2024-01-10", "County exporters court buyers in India",
               ["A county trade delegation returned from India with three "
                "signed letters of intent. Officials praised the trip as a "
                "success and expect strong orders by summer.",
                "Local manufacturers said the new contacts could benefit "
                "hiring. A follow up visit is planned."]),
    "brk-02": ("2024-01-11", "Port traffic slows as China orders dip",
               [BRK_HEADER,
                "Port traffic slowed for a third month as orders from China "
                "dipped. Dock workers worry about reduced shifts, and one "
                "union leader warned of a bad winter.",
                "County planners said reserves remain strong. They expect no "
                "layoffs before spring."]),
    "brk-03": ("2024-01-12", "Tech park firm lands contract in Israel",
               ["A Brookfield tech park firm landed its first contract in "
                "Israel this week. Executives celebrated the deal and called "
                "it a win for the region.",
                "Analysts said the contract could double the firm's revenue. "
                "Hiring begins next month.",
                BRK_FOOTER]),
    "brk-04": ("2024-01-14",
               "Grain futures swing on India and China harvest news",
               ["Grain futures swung this week on harvest news from India "
                "and China. Traders feared a glut early on, then prices "
                "recovered.",
                "A county agronomist said local growers should stay calm. "
                "Contracts signed last fall protect most of the crop."]),
    "brk-05": ("2024-01-15", "Bridge repair moves to night schedule",
               [BRK_HEADER,
                "Repairs on the Mill Street bridge move to a night schedule "
                "on Monday. The county said the change should cut delays for "
                "commuters.",
                "The project remains on budget. Completion is set for "
                "June."]),
    "brk-06": ("2024-01-16",
               "University lab joins climate study with China partners",
               ["A university lab will join a five year climate study with "
                "partners in China. The lead scientist praised the shared "
                "sensor network as a great resource.",
                "The grant funds two new positions. Field work starts in "
                "August."]),
    "brk-07": ("2024-01-18", "Annual report on the India exchange program",
               None),  # served as a PDF
    "brk-08": ("2024-01-19", "Museum opens photography show from Israel",
               ["The county museum opened a photography show from Israel on "
                "Friday. The curator called the collection a stunning "
                "success.",
                "Attendance broke the opening day record. The show runs "
                "through May.",
                BRK_FOOTER]),
    "brk-09": ("2024-01-21", "School board weighs exchange trip to India",
               ["The school board weighed a proposal for a student exchange "
                "trip to India next spring. Supporters called it a great "
                "opportunity, while others worried about cost.",
                "A vote is expected at the next meeting. Parents can comment "
                "until Friday."]),
    "brk-10": ("2024-01-23", "Aid group ships supplies bound for Palestine",
               ["A local aid group shipped its largest container of supplies "
                "bound for Palestine. Volunteers worked through the weekend "
                "and praised the community's support.",
                "The group said need remains high. A second shipment is "
                "planned for fall."]),
    "brk-11": ("2024-01-25", "Soybean growers watch China demand closely",
               ["Soybean growers are watching demand from China closely "
                "after a weak first quarter. A bad season would hurt the "
                "co-op's reserve fund.",
                "Extension agents urged calm. Export volumes often recover "
                "by harvest, they said."]),
    "brk-12": ("2024-01-26", "Farmers market extends season by four weeks",
               ["The farmers market will extend its season by four weeks "
                "this year. Vendors celebrated the change and expect strong "
                "foot traffic.",
                "Winter hours begin in November. The pavilion stays open "
                "rain or shine."]),
}

BRK_PAGES = [
    ["brk-01", "brk-02", "brk-03"],
    ["brk-04", "brk-05", "brk-06"],
    ["brk-07", "brk-08", "brk-09"],
    ["brk-10", "brk-11", "brk-12"],
]


def brk_url(slug):
    if slug == "brk-07":
        return f"{BRK_BASE}/docs/brk-07.pdf"
    return f"{BRK_BASE}/stories/{slug}"


def brk_display_date(iso):
    months = ["Jan", "Feb", "Mar", "Apr", "May", "Jun",
              "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"]
    y, m, d = iso.split("-")
    return f"{months[int(m) - 1]} {int(d)}"


def brookfield_listing(items):
    rows = "\n".join(
        f'  <li>\n'
        f'    <a href="{brk_url(slug)}">{BRK_ARTICLES[slug][1]}</a>\n'
        f'    <time class="pub" datetime="{BRK_ARTICLES[slug][0]}">'
        f'{brk_display_date(BRK_ARTICLES[slug][0])}</time>\n'
        f'  </li>'
        for slug in items)
    return f"""<!DOCTYPE html>
<html>
<head><title>Brookfield Daily archive</title><meta charset="utf-8"></head>
<body>
<h1>Brookfield Daily archive</h1>
<ul class="story-list">
{rows}
</ul>
</body>
</html>
"""


def brookfield_story(title, paragraphs):
    body = "\n".join(f"  <p>{p}</p>" for p in paragraphs)
    return f"""<!DOCTYPE html>
<html>
<head><title>{title}</title><meta charset="utf-8"></head>
<body>
<div class="story-body">
{body}
</div>
</body>
</html>
"""


def emit_brookfield():
    for n, items in enumerate(BRK_PAGES, start=1):
        record(f"{BRK_BASE}/archive/page/{n}", brookfield_listing(items))
    record(f"{BRK_BASE}/archive/page/5", "")
    for slug, (_, title, paragraphs) in BRK_ARTICLES.items():
        if slug == "brk-07":
            pdf = (b"%PDF-1.4\n1 0 obj\n<< /Type /Catalog >>\nendobj\n"
                   b"trailer\n<< /Root 1 0 R >>\n%%EOF\n")
            record(brk_url(slug), pdf, content_type="application/pdf",
                   encoding="")
        else:
            record(brk_url(slug), brookfield_story(title, paragraphs))


# ---------------------------------------------------------------------------
# calder: SecondPageProbe. A next link reveals /blog/page/2; page four has
# no posts and ends the walk.

CAL_BASE = "https://calder.example"

CAL_ARTICLES = {
    "cal-01": ("12 February 2024", "Archaeology dig in Israel yields early finds",
               ["A Calder team joined an archaeology dig in Israel and "
                "reported early finds within the first week. The field "
                "director praised the crew's care and called the season a "
                "success so far.",
                "The team posts updates each Friday. A public lecture "
                "follows in the fall."]),
    "cal-02": ("13 February 2024",
               "Oral history project records voices from Palestine",
               ["An oral history project is recording interviews with "
                "families from Palestine. The archivist said the stories "
                "carry both grief and hope.",
                "Transcripts will be free to researchers. The first batch "
                "posts next month."]),
    "cal-03": ("15 February 2024",
               "Guest chef brings street food of India to campus",
               ["A guest chef brought the street food of India to the dining "
                "commons on Thursday. Students celebrated the menu and the "
                "line stretched past the quad.",
                "The chef teaches a workshop on Saturday. Seats are "
                "limited."]),
    "cal-04": ("17 February 2024",
               "Water researchers compare notes with Israel institute",
               ["Calder water researchers compared drought notes with an "
                "institute in Israel. Both teams worry about reservoir "
                "decline, and one scientist warned of a real danger to "
                "summer supply.",
                "The groups will share sensor data for a year. A joint paper "
                "is planned."]),
    "cal-05": ("19 February 2024",
               "Photo essay documents olive harvest in Palestine",
               ["A senior's photo essay documents the olive harvest in "
                "Palestine. The jury praised its calm, careful eye and "
                "awarded it top honors.",
                "Prints hang in the gallery through March. An artist talk is "
                "set for the 21st."]),
    "cal-06": ("20 February 2024", "Live blog: campus election night",
               None),  # served as a javascript shell
    "cal-07": ("22 February 2024",
               "Startup founded by alumni expands to India",
               ["A logistics startup founded by two alumni will expand to "
                "India this summer. The founders called the move a great "
                "step and expect strong demand.",
                "The firm plans to hire twenty people. A campus recruiting "
                "visit is scheduled."]),
    "cal-08": ("24 February 2024", "Debate on Israel policy fills lecture hall",
               ["A debate on Israel policy filled the lecture hall on "
                "Monday. The exchange grew heated, and moderators worked to "
                "keep tempers calm.",
                "Both sides claimed the stronger case. The society will post "
                "the full video."]),
    "cal-09": ("26 February 2024", "Visiting poet reads new work on Palestine",
               ["A visiting poet read new work on Palestine to a quiet, full "
                "room. Critics praised the collection's honesty about loss "
                "and fear.",
                "The press will publish the book in May. Signed copies sold "
                "out."]),
    "cal-10": ("27 February 2024", "Notebook: odds and ends from the quad",
               None),  # layout drops the body container
    "cal-11": ("28 February 2024",
               "Exchange students reflect on a year in China",
               ["Four exchange students reflected on a year spent in China. "
                "They described the program as a success and praised their "
                "host families' support.",
                "Applications for next year open Monday. Funding covers "
                "travel and housing."]),
    "cal-12": ("29 February 2024",
               "Chess club hosts online match with Israel university",
               ["The chess club hosted an online match with a university in "
                "Israel. The visitors won the final board, a narrow loss the "
                "captain called a fair result.",
                "A rematch is planned for the fall. The club meets "
                "Wednesdays."]),
}

CAL_PAGES = [
    ["cal-01", "cal-02", "cal-03", "cal-04"],
    ["cal-05", "cal-06", "cal-07", "cal-08"],
    ["cal-09", "cal-10", "cal-11", "cal-12"],
]


def calder_listing(items, next_href):
    rows = "\n".join(
        f'  <article class="teaser">\n'
        f'    <h2 class="post-title"><a href="/blog/posts/{slug}">'
        f'{CAL_ARTICLES[slug][1]}</a></h2>\n'
        f'    <span class="when">{CAL_ARTICLES[slug][0]}</span>\n'
        f'  </article>'
        for slug in items)
    nav = (f'<a rel="next" href="{next_href}">Next »</a>'
           if next_href else "")
    return f"""<!DOCTYPE html>
<html>
<head><title>Calder Review blog</title><meta charset="utf-8"></head>
<body>
<main>
{rows}
</main>
{nav}
</body>
</html>
"""


def emit_calder():
    record(f"{CAL_BASE}/blog", calder_listing(CAL_PAGES[0], "/blog/page/2"))
    record(f"{CAL_BASE}/blog/page/2",
           calder_listing(CAL_PAGES[1], "/blog/page/3"))
    record(f"{CAL_BASE}/blog/page/3", calder_listing(CAL_PAGES[2], None))
    record(f"{CAL_BASE}/blog/page/4", """<!DOCTYPE html>
<html>
<head><title>Calder Review blog</title><meta charset="utf-8"></head>
<body>
<main><p class="empty">No more posts.</p></main>
</body>
</html>
""")
    for slug, (_, title, paragraphs) in CAL_ARTICLES.items():
        url = f"{CAL_BASE}/blog/posts/{slug}"
        if slug == "cal-06":
            record(url, """<!DOCTYPE html>
<html>
<head><title>Calder Review</title><meta charset="utf-8"></head>
<body>
<div id="root"></div>
<script src="/static/app.js"></script>
</body>
</html>
""")
        elif slug == "cal-10":
            record(url, f"""<!DOCTYPE html>
<html>
<head><title>{title}</title><meta charset="utf-8"></head>
<body>
<h1 class="headline">{title}</h1>
<div class="sidebar">This page misplaces its text outside the body
container, so extraction finds nothing.</div>
</body>
</html>
""")
        else:
            body = "\n".join(f"  <p>{p}</p>" for p in paragraphs)
            record(url, f"""<!DOCTYPE html>
<html>
<head><title>{title}</title><meta charset="utf-8"></head>
<body>
<h1 class="headline">{title}</h1>
<div class="post-body">
{body}
</div>
</body>
</html>
""")


# ---------------------------------------------------------------------------
# dunmore: BackendApi. A JSON endpoint serves listing fragments; page three
# returns an empty array.

DUN_BASE = "https://dunmore.example"

DUN_ARTICLES = {
    "dun-01": ("2024-03-10", "Student film on Palestine wins festival slot",
               ["A student documentary on daily life in Palestine won a slot "
                "at the spring festival. The director praised her crew and "
                "called the news a dream come true.",
                "The film screens twice in April. A panel follows the "
                "premiere."]),
    "dun-02": ("2024-03-11", "Robotics team preps for finals in India",
               ["The robotics team is preparing for the world finals in "
                "India this June. The captain said the squad feels strong "
                "after an unbeaten season.",
                "Sponsors covered the travel costs. A send off rally is "
                "planned."]),
    "dun-03": ("2024-03-12", "Panel examines water access in Palestine",
               ["A policy panel examined water access in Palestine on "
                "Wednesday. Speakers described chronic shortage and warned "
                "the crisis could worsen without repairs.",
                "The series continues next month. Recordings post to the "
                "department site."]),
    "dun-04": ("undated", "Untitled draft", None),  # rejected: no date
    "dun-05": ("2024-03-14", "Historians digitize trade ledgers from China",
               ["Two historians began digitizing a set of trade ledgers from "
                "China. They called the collection a great find for the "
                "field.",
                "Scans will be public domain. The first volume posts this "
                "fall."]),
    "dun-06": ("2024-03-16",
               "Medical school signs research pact with Israel hospital",
               ["The medical school signed a research pact with a hospital "
                "in Israel. Deans praised the agreement and expect strong "
                "trial enrollment.",
                "The first joint study begins in January. Funding runs five "
                "years."]),
    "dun-07": ("2024-03-18",
               "Lecture traces embroidery traditions of Palestine",
               ["A textile historian traced the embroidery traditions of "
                "Palestine in Thursday's lecture. She celebrated the craft's "
                "survival and the quiet strength of its keepers.",
                "A workshop follows next week. Materials are provided."]),
    "dun-08": ("2024-03-19", "Sánchez lecture examines India trade policy",
               ["Professor Sánchez examined India trade policy in the "
                "spring lecture. She argued the new rules could benefit "
                "small exporters but warned of real risk in a trade "
                "dispute.",
                "The talk drew a full house. Slides are posted online."]),
    "dun-09": ("2024-03-21", "Choir sets benefit concert for Palestine relief",
               ["The choir set a benefit concert for Palestine relief next "
                "Friday. Ticket sales already beat last year's total, a "
                "success organizers celebrated.",
                "Doors open at seven. Donations are accepted at the door."]),
    "dun-10": ("2024-03-22", "Fellowship sends two graduates to Israel labs",
               ["A new fellowship sends two graduates to research labs in "
                "Israel. Both called the award a great honor.",
                "Applications for next year open in October. Two more slots "
                "are funded."]),
}

DUN_PAGES = [
    ["dun-01", "dun-02", "dun-03", "dun-04", "dun-05"],
    ["dun-06", "dun-07", "dun-08", "dun-09", "dun-10"],
]


def dunmore_api_page(page_no, items):
    results = []
    for slug in items:
        date, title, _ = DUN_ARTICLES[slug]
        fragment = (f'<li class="hit"><a href="/story/{slug}">{title}</a> '
                    f'<span class="d">{date}</span></li>')
        results.append({"html": fragment, "id": slug})
    return json.dumps({"page": page_no, "results": results}, indent=2,
                      sort_keys=True) + "\n"


def emit_dunmore():
    for n, items in enumerate(DUN_PAGES, start=1):
        record(f"{DUN_BASE}/api/archive?p={n}", dunmore_api_page(n, items),
               content_type="application/json", encoding="")
    record(f"{DUN_BASE}/api/archive?p=3", "[]",
           content_type="application/json", encoding="")
    for slug, (_, title, paragraphs) in DUN_ARTICLES.items():
        if slug == "dun-04":
            continue  # its listing entry is undated, so it is never fetched
        body = "\n".join(f"  <p>{p}</p>" for p in paragraphs)
        declare = slug != "dun-08"  # dun-08 never declares its encoding
        meta = '<meta charset="utf-8">' if declare else ""
        record(f"{DUN_BASE}/story/{slug}", f"""<!DOCTYPE html>
<html>
<head><title>{title}</title>{meta}</head>
<body>
<h1 class="headline">{title}</h1>
<div class="body-text">
{body}
</div>
</body>
</html>
""", content_type="text/html; charset=utf-8" if declare else "text/html",
               encoding="utf-8" if declare else "")


# ---------------------------------------------------------------------------

def emit_config():
    config = {
        "corpus_dir": "corpus",
        "lexicon": "../../data/lexicon.txt",
        "stopwords": "../../data/stopwords.txt",
        "keywords": ["India", "China", "Israel", "Palestine"],
        "query": {
            "case_sensitive": False,
            "match_mode": "substring",
            "search_titles": True,
        },
        "summarizer": {
            "max_tokens": 500,
            "overlong_policy": "reject",
            "backend": "native",
        },
        "sentiment": {"backend": "native"},
        "report": {"histogram_bins": 10},
        "sites": [
            {
                "school_id": "ashford",
                "base_url": f"{ASH_BASE}/news",
                "strategy": "NavBarMax",
                "max_page_selector": "nav.pagination a",
                "article_link_selector": "div.article-list a",
                "date_selector": "span.posted",
                "date_formats": ["%B %d, %Y"],
                "title_selector": "h1.headline",
                "body_selector": "div.article-body",
                "rate_limit": 0,
                "scraping_permitted": True,
            },
            {
                "school_id": "brookfield",
                "base_url": f"{BRK_BASE}/archive",
                "strategy": "UrlTemplate",
                "page_url_template": f"{BRK_BASE}/archive/page/{{page}}",
                "article_link_selector": "ul.story-list a",
                "date_selector": "time.pub",
                "date_formats": ["%Y-%m-%d"],
                "body_selector": "div.story-body",
                "rate_limit": 0,
                "scraping_permitted": True,
                "watermarks": {
                    "header_patterns": [BRK_HEADER],
                    "footer_patterns":
                        ["re:Copyright \\d{4} Brookfield Daily\\. "
                         "All rights reserved\\."],
                },
            },
            {
                "school_id": "calder",
                "base_url": f"{CAL_BASE}/blog",
                "strategy": "SecondPageProbe",
                "article_link_selector": "h2.post-title a",
                "date_selector": "span.when",
                "date_formats": ["%d %B %Y"],
                "title_selector": "h1.headline",
                "body_selector": "div.post-body",
                "rate_limit": 0,
                "scraping_permitted": True,
            },
            {
                "school_id": "dunmore",
                "base_url": f"{DUN_BASE}/paper",
                "strategy": "BackendApi",
                "api_endpoint": "/api/archive",
                "api_page_param": "p",
                "article_link_selector": "li.hit a",
                "date_selector": "span.d",
                "date_formats": ["%Y-%m-%d"],
                "title_selector": "h1.headline",
                "body_selector": "div.body-text",
                "rate_limit": 0,
                "scraping_permitted": True,
            },
        ],
    }
    path = FIXTURES / "golden_config.json"
    path.write_bytes((json.dumps(config, indent=2) + "\n").encode("utf-8"))


# Published reference rows: mean bias per school and keyword, in points.
PUBLISHED_ROWS = [
    ("LIU", "Israel", 1.04, 0.92, -1.91),
    ("LIU", "Palestine", -1.70, -1.00, 2.80),
    ("LIU", "India", -1.11, 2.16, -1.04),
    ("LIU", "China", -2.86, 1.74, 1.11),
    ("Georgetown", "Israel", -1.48, -1.07, 2.56),
    ("Georgetown", "Palestine", -2.42, -0.29, 2.71),
    ("Georgetown", "India", -2.78, 0.26, 2.53),
    ("Georgetown", "China", -2.08, -0.27, 2.35),
    ("CMU", "Israel", 0.05, -0.25, 0.20),
    ("CMU", "Palestine", -0.67, 1.69, -1.02),
    ("CMU", "India", -1.38, -0.65, 2.03),
    ("CMU", "China", -1.22, -0.92, 2.15),
    ("AU", "Israel", -1.61, 0.96, 0.66),
    ("AU", "Palestine", 0.31, 2.01, -2.31),
    ("AU", "India", -1.05, -1.03, 2.06),
    ("AU", "China", -3.70, 0.15, 3.56),
    ("USC", "China", -3.36, -0.02, 3.39),
    ("York", "Israel", -1.82, 1.06, 0.76),
    ("York", "Palestine", -4.69, 2.60, 2.10),
    ("York", "India", -3.76, 0.46, 3.30),
    ("York", "China", -3.71, 1.58, 2.09),
]


def emit_published_rows():
    lines = ["school,keyword,pos,neg,neu"]
    for school, keyword, pos, neg, neu in PUBLISHED_ROWS:
        lines.append(f"{school},{keyword},{pos:.2f},{neg:.2f},{neu:.2f}")
    path = FIXTURES / "bias_rows_published.csv"
    path.write_bytes(("\n".join(lines) + "\n").encode("utf-8"))


def main():
    if SITE_DIR.exists():
        shutil.rmtree(SITE_DIR)
    SITE_DIR.mkdir(parents=True)
    emit_ashford()
    emit_brookfield()
    emit_calder()
    emit_dunmore()
    emit_config()
    emit_published_rows()
    pages = len(list(SITE_DIR.glob("*.json")))
    print(f"wrote {pages} recorded pages to {SITE_DIR}")
    print(f"wrote {FIXTURES / 'golden_config.json'}")
    print(f"wrote {FIXTURES / 'bias_rows_published.csv'}")


if __name__ == "__main__":
    main()
