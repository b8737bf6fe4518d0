#include "cybug/bots.hpp"

namespace cybug::sim {

namespace {

// Must stay byte-identical to assets/bots/ghazu.cb.
constexpr std::string_view kGhazuCorpus = R"(name GHAZU
raise shield
Start:
long range scan
if scan found enemy then discharge energy
if scan found enemy then lower shield
if scan found enemy then launch missile
if scan found enemy then raise shield
if scan found enemy then turn right
if scan found enemy then move forward
if scan found enemy then turn left
goto Start

if scan found flag then move forward
if scan found flag then move forward
goto Start

if scan found flag then move forward
Bhagta:
turn right
move forward
if bump barrier then gosub Bhagta
goto start
Museebat:
generate random
if random is 1 then turn right
if random is 2 then turn left
if random is 3 then turn right
if random is 4 then turn left
move forward

if bump barrier then
goto Museebat
goto Start

if scan found mine then discharge energy
if fuel is < 99 goto then hide
if damage is >95 then goto Suiside

Suiside:
goto Start
lower shield
launch missile
self destruct
goto Start
)";

// The same strategy table, written without the corpus bugs: scan, then in
// priority order suicide-when-doomed, attack, claim flags, evade walls,
// clear mines, refuel, advance.
constexpr std::string_view kGhazuSpec = R"(name GhazuSpec
raise shield
Start:
if damage is > 95 then goto Desperate
long range scan
if scan found enemy then goto Attack
if scan found flag then goto Claim
if scan found barrier then goto Evade
if scan found mine then discharge energy
if fuel is < 50 then goto Refuel
move forward
goto Start

Attack:
discharge energy
lower shield
launch missile
raise shield
goto Start

Claim:
move forward
move forward
goto Start

Evade:
turn right
move forward
goto Start

Refuel:
if scan found fuel then move forward
move forward
goto Start

Desperate:
if scan found enemy then self destruct
long range scan
if scan found enemy then self destruct
move forward
goto Start
)";

constexpr std::string_view kIdle = R"(name Idle
Start:
goto Start
)";

constexpr std::string_view kWanderer = R"(name Wanderer
Start:
generate random
if random is 1 then turn left
if random is 2 then turn right
if bump barrier then turn right
move forward
goto Start
)";

}  // namespace

std::vector<std::string_view> builtin_bot_names() {
    return {"ghazu_corpus", "ghazu_spec", "idle", "wanderer"};
}

std::optional<std::string_view> builtin_source(std::string_view name) {
    if (name == "ghazu_corpus") return kGhazuCorpus;
    if (name == "ghazu_spec") return kGhazuSpec;
    if (name == "idle") return kIdle;
    if (name == "wanderer") return kWanderer;
    return std::nullopt;
}

std::optional<caicl::Program> builtin_bot(std::string_view name) {
    auto source = builtin_source(name);
    if (!source) return std::nullopt;
    return caicl::parse(*source, caicl::ParseMode::lenient).program;
}

}  // namespace cybug::sim
