#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>

namespace sumkit {

namespace detail {

// Common English verb lemmas plus irregular inflections. Entries deliberately
// left out because they dominate crawled boilerplate: contact, home, link,
// name, map, sign, search, post, mail, email, view, download, log.
inline constexpr std::string_view kVerbWords = R"(
abandon accept access accommodate accompany accomplish achieve acquire act
adapt add address adjust administer admit adopt advance advertise advise
advocate affect afford agree aid aim alert align allocate allow alter analyse
analyze announce answer anticipate appear apply appoint appreciate approach
approve argue arise arrange arrive ask assemble assess assign assist assume
assure attach attack attempt attend attract audit augment automate avoid
await award back bake balance ban base be bear beat become begin behave
believe belong benefit bet bid bind bite bleed blend block blow boost borrow
break breed bring broadcast build burn burst buy calculate call campaign
capture care carry cast catch cause celebrate challenge change characterise
characterize charge chat check choose circulate cite claim clarify classify
clean climb close coach collaborate collect combat combine come commission
commit communicate compare compete compile complain complement complete
comply compose compute conceive concentrate concern conclude conduct confirm
connect conserve consider consist consolidate constitute construct consult
consume contain continue contribute convene convert convey convince cook
cooperate coordinate cope correspond cost counsel count counter cover craft
create cross cultivate customise customize cut deal debate decide declare
decline decrease dedicate defend define deliver demonstrate depend deploy
derive describe design destroy detect determine develop devise devote differ
digitise digitize diminish direct disappear discover discuss dispatch display
disseminate distribute dive divide do document donate double draw dream drink
drive drop earn eat edit educate elect elevate eliminate embed embrace emerge
emphasise emphasize employ empower enable encompass encounter encourage end
endorse engage enhance enjoy enlarge enrich enrol enroll ensure enter
entertain equip establish estimate evaluate evolve examine exceed exchange
execute exercise exist expand expect experience experiment explain explore
export express extend extract face facilitate fail fall favour feature feed
feel fight fill finance find finish fit fix fly focus follow forecast forget
form formulate foster found fund gain gather generate get give go govern
grant grow guarantee guard guide handle happen harness harvest have heal
hear help hide highlight hire hit hold honour hope host house identify
illustrate imagine impact implement import improve include incorporate
increase incubate indicate influence inform initiate innovate inspire
install integrate intend interact intervene interview introduce invent
invest investigate invite involve issue join judge keep know labour lack
last launch lead learn leave lend let leverage lie lift like listen live
locate look lose love lower maintain make manage manufacture match
materialise mean measure mediate meet mention mentor merge migrate minimise
minimize mitigate mobilise mobilize model moderate modernise modernize
modify monitor motivate move multiply navigate need negotiate nominate
notice notify nurture observe obtain occur offer open operate orchestrate
organise organize orient outline overcome oversee own participate partner
pass pay perform persist persuade pick pilot pioneer place plan plant play
pledge point position possess practice practise prefer prepare present
preserve prevent print prioritise prioritize produce program progress
promote propose protect prototype prove provide publish purchase pursue
push put qualify quantify raise reach read realise realize receive
recognise recognize recommend reconnect recruit recycle redesign reduce
refer refine reflect regard regenerate register rehabilitate reinforce
relate release relocate rely remain remember remove renew renovate rent
repair replace replicate report represent require research reside resolve
respond restore result retain rethink retrain return reuse reveal review
revise revitalise revitalize reward run safeguard save say scale schedule
secure see seek seem select sell send serve set settle shape share shift
show shut simplify sit situate solve sort speak specialise specialize
specify spend sponsor spread stand start state stay steer stimulate stop
strengthen strive structure struggle study submit succeed suffer suggest
supervise supply support surround survey survive sustain tackle take talk
target teach tell tend test thank think thrive tie trace track trade train
transfer transform translate travel treat trust try turn understand
undertake unify unite update upgrade uphold use utilise utilize validate
verify visit volunteer vote wait walk want warn waste watch wear weave
welcome widen win wish withdraw witness wonder work write
am are is was were been being has had does did done said made took taken
came gave given went gone found thought brought bought built sent spent
kept left felt met led held ran got gotten grew grown knew known saw seen
wrote written spoke spoken broke broken chose chosen drove driven ate eaten
fell fallen flew flown drew drawn shown began begun drank drunk sang sung
won lost paid sold told stood understood heard meant learnt taught caught
fought sought laid lay lain rose risen wore worn threw thrown became struck
dealt hung sat slept woke woken fed bled bred arose arisen underwent
undergone overcame withdrew withdrawn upheld foresaw foreseen born bore
)";

inline constexpr std::string_view kStopWords = R"(
a about above after again against all almost along already also although
always am among an and any are around as at back be because been before
being below between both but by can cannot could did do does doing down
during each either enough even ever every few for from further had has have
having he her here hers herself him himself his how however i if in into is
it its itself just least less many may me might more most much must my
myself neither never no nor not now of off often on once only onto or other
our ours ourselves out over own per rather same she should since so some
still such than that the their theirs them themselves then there therefore
these they this those through throughout to together too toward towards
under until up upon us very was we well were what when where whether which
while who whom whose why will with within without would yet you your yours
yourself yourselves
)";

// Chunks (last whitespace-delimited run up to and including the period) that
// never end a sentence even before an uppercase letter.
inline constexpr std::string_view kAbbreviations =
    "e.g. i.e. etc. dr. no. mr. mrs. ms. prof. vs. fig. st. inc. ltd. approx.";

// Bundled grand-societal-challenge topics, same format the lexicon loader
// reads: topic name, comma-separated keywords.
inline constexpr std::string_view kChallengeLexicon = R"(health,health,healthcare,medical,medicine,patient,patients,disease,diseases,wellbeing,well-being,clinical,hospital,hospitals,therapy,mental,ageing,aging,elderly,disability,nutrition,diagnosis,treatment,rehabilitation,pharma,dementia
food_agriculture,food,agriculture,farming,farm,farms,farmers,crop,crops,agricultural,soil,rural,fisheries,fishery,livestock,organic,harvest,bioeconomy,forestry,aquaculture,seeds,meals,cooking,diet
energy,energy,renewable,renewables,solar,wind,electricity,power,grid,biomass,geothermal,hydrogen,battery,batteries,heating,photovoltaic,fuel,fuels,biofuel,insulation,turbine,turbines
transport,transport,transportation,mobility,traffic,vehicle,vehicles,rail,railway,bus,buses,cycling,bicycle,bicycles,logistics,shipping,aviation,road,roads,transit,commuting,freight,rideshare
climate_environment,climate,environment,environmental,emissions,carbon,pollution,biodiversity,ecosystem,ecosystems,sustainability,sustainable,recycling,waste,conservation,warming,greenhouse,circular,nature,water,flooding,drought
inclusive_society,inclusion,inclusive,social,society,communities,community,citizens,equality,migration,migrants,refugees,poverty,unemployment,education,participation,democracy,youth,gender,integration,welfare,volunteers,cohesion,homeless,homelessness,elderly
security,security,secure,safety,crime,cybersecurity,cyber,protection,emergency,terrorism,fraud,policing,border,disaster,disasters,risk,surveillance,defence,defense,resilience
digital,digital,ict,internet,online,software,data,platform,platforms,app,apps,technology,technologies,computing,ai,artificial,intelligence,smart,web,digitalisation,digitalization,broadband,connectivity,blockchain,sensors,algorithms
manufacturing,manufacturing,factory,factories,production,industrial,industry,automation,robotics,processing,assembly,machinery,fabrication,prototyping,printing,additive,engineering,lean
materials,materials,material,nanotechnology,nano,composites,polymers,chemistry,chemical,coatings,alloys,graphene,textiles,plastics,ceramics,semiconductors,photonics,biomaterials,metals,minerals
)";

inline std::unordered_set<std::string> parse_word_set(std::string_view raw) {
    std::unordered_set<std::string> out;
    std::istringstream in{std::string(raw)};
    std::string word;
    while (in >> word) out.insert(word);
    return out;
}

} // namespace detail

inline const std::unordered_set<std::string>& verb_lexicon() {
    static const std::unordered_set<std::string> set = detail::parse_word_set(detail::kVerbWords);
    return set;
}

inline const std::unordered_set<std::string>& english_stopwords() {
    static const std::unordered_set<std::string> set = detail::parse_word_set(detail::kStopWords);
    return set;
}

inline const std::unordered_set<std::string>& sentence_abbreviations() {
    static const std::unordered_set<std::string> set =
        detail::parse_word_set(detail::kAbbreviations);
    return set;
}

} // namespace sumkit
