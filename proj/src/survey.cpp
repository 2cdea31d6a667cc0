#include "wrlat/survey.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

namespace wrlat {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// configuration

OutputFormat parse_format(const std::string& s)
{
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "text") return OutputFormat::Text;
    throw InvalidInput("unknown output format '" + s + "' (expected json, csv or text)");
}

std::string format_name(OutputFormat f)
{
    switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
    }
    return "json";
}

void SurveyConfig::validate() const
{
    if (d_min > d_max) throw InvalidInput("d_min must not exceed d_max");
    if (norm_bound < 1) throw InvalidInput("norm_bound must be positive");
    if (workers == 0) throw InvalidInput("workers must be positive");
}

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& key, const std::string& v)
{
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        if (pos != v.size()) throw InvalidInput("");
        return x;
    } catch (const std::exception&) {
        throw InvalidInput("config key '" + key + "' expects an integer, got '" + v + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& v)
{
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw InvalidInput("config key '" + key + "' expects a boolean, got '" + v + "'");
}

void apply_key(SurveyConfig& cfg, const std::string& key, const std::string& value)
{
    if (key == "d_min") cfg.d_min = parse_int(key, value);
    else if (key == "d_max") cfg.d_max = parse_int(key, value);
    else if (key == "norm_bound") cfg.norm_bound = parse_int(key, value);
    else if (key == "require_squarefree") cfg.require_squarefree = parse_bool(key, value);
    else if (key == "output_format") cfg.output_format = parse_format(value);
    else if (key == "workers") {
        const auto w = parse_int(key, value);
        if (w < 1) throw InvalidInput("workers must be positive");
        cfg.workers = static_cast<unsigned>(w);
    } else {
        throw InvalidInput("unknown config key '" + key + "'");
    }
}

}  // namespace

SurveyConfig parse_config(const std::string& text, SurveyConfig cfg)
{
    const std::string body = trim(text);
    if (!body.empty() && body.front() == '{') {
        Json j;
        try {
            j = Json::parse(body);
        } catch (const Json::parse_error& e) {
            throw InvalidInput(std::string("config JSON: ") + e.what());
        }
        for (const auto& [key, value] : j.items()) {
            std::string v;
            if (value.is_string()) v = value.get<std::string>();
            else if (value.is_boolean()) v = value.get<bool>() ? "true" : "false";
            else if (value.is_number_integer()) v = std::to_string(value.get<long long>());
            else throw InvalidInput("config key '" + key + "' has unsupported value type");
            apply_key(cfg, key, v);
        }
        return cfg;
    }
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw InvalidInput("config line without '=': " + line);
        apply_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

// ---------------------------------------------------------------------------
// classification and survey

SurveyRecord classify_ideal(const IdealTriple& t)
{
    const BinaryForm form = form_from_ideal(t);
    const MinimalSet ms = minimal_vectors(form);
    SurveyRecord r;
    r.D = t.order.D();
    r.a = t.a;
    r.b = t.b;
    r.g = t.g;
    r.norm = ideal_norm(t);
    r.minimum = ms.minimum;
    r.n_minimal = ms.vectors.size();
    r.wr = r.n_minimal >= 4;
    r.hexagonal = r.n_minimal == 6;
    r.bound_ok = min_bound_holds(t.order, r.minimum, r.norm);
    r.order_maximal = t.order.maximal();
    return r;
}

SurveyRecord classify(std::int64_t D, std::int64_t a, std::int64_t b, std::int64_t g)
{
    return classify_ideal(IdealTriple{a, b, g, QuadOrder(D)});
}

std::vector<std::int64_t> survey_radicands(const SurveyConfig& cfg)
{
    std::vector<std::int64_t> out;
    for (std::int64_t D = cfg.d_min; D <= cfg.d_max; ++D) {
        if (D == 0 || D == 1 || is_perfect_square(D)) continue;
        if (cfg.require_squarefree && !is_squarefree(D < 0 ? -D : D)) continue;
        out.push_back(D);
    }
    return out;
}

namespace {

std::vector<SurveyRecord> survey_one(std::int64_t D, std::int64_t norm_bound)
{
    const QuadOrder order(D);
    std::vector<SurveyRecord> out;
    for (const IdealTriple& t : enumerate_ideals(order, norm_bound)) {
        SurveyRecord r = classify_ideal(t);
        if (!r.bound_ok) {
            throw InvariantViolation("minimum bound violated for D=" + std::to_string(D) + " ideal (" +
                                     std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.g) +
                                     "): minimum " + to_string(r.minimum) + ", norm " + std::to_string(r.norm));
        }
        if (r.n_minimal != 2 && r.n_minimal != 4 && r.n_minimal != 6)
            throw InvariantViolation("planar minimal set of impossible size for D=" + std::to_string(D));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

SurveyResult run_survey(const SurveyConfig& cfg)
{
    cfg.validate();
    const std::vector<std::int64_t> radicands = survey_radicands(cfg);
    std::vector<std::vector<SurveyRecord>> per_field(radicands.size());
    std::vector<std::exception_ptr> errors(radicands.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < radicands.size(); i = next++) {
            try {
                per_field[i] = survey_one(radicands[i], cfg.norm_bound);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n_threads = std::min<std::size_t>(cfg.workers, std::max<std::size_t>(1, radicands.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    SurveyResult res;
    res.summary.fields = radicands.size();
    for (auto& recs : per_field) {
        std::sort(recs.begin(), recs.end(), [](const SurveyRecord& l, const SurveyRecord& r) {
            return std::tie(l.norm, l.a, l.b, l.g) < std::tie(r.norm, r.a, r.b, r.g);
        });
        for (auto& r : recs) {
            res.summary.wr += r.wr;
            res.summary.hexagonal += r.hexagonal;
            res.summary.bound_ok += r.bound_ok;
            res.records.push_back(std::move(r));
        }
    }
    res.summary.records = res.records.size();
    return res;
}

// ---------------------------------------------------------------------------
// tables

std::string format_ideal(const IdealTriple& t)
{
    return "⟨" + format_element(t.order.D(), ideal_element(t, 1, 0)) + ", " +
           format_element(t.order.D(), ideal_element(t, 0, 1)) + "⟩";
}

std::string format_minimal_elements(const IdealTriple& t)
{
    const MinimalSet ms = minimal_vectors(form_from_ideal(t));
    std::vector<SqrtCoords> reps;
    for (const auto& [m, n] : ms.vectors) {
        SqrtCoords z = ideal_element(t, m, n);
        if (z.x > 0 || (z.x == 0 && z.y > 0)) reps.push_back(std::move(z));
    }
    std::sort(reps.begin(), reps.end(), [](const SqrtCoords& l, const SqrtCoords& r) {
        const Rational al = abs(l.y), ar = abs(r.y);
        if (al != ar) return al < ar;
        if (l.x != r.x) return l.x < r.x;
        return l.y < r.y;
    });
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const bool paired = i + 1 < reps.size() && reps[i].y != 0 && reps[i + 1].x == reps[i].x &&
                            reps[i + 1].y == -reps[i].y;
        if (!paired) {
            parts.push_back("±" + format_element(t.order.D(), reps[i]));
            continue;
        }
        std::string s = format_element(t.order.D(), {reps[i].x, abs(reps[i].y)});
        s.replace(s.find('+'), 1, " ± ");
        parts.push_back("±" + s);
        ++i;
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
    return out;
}

std::vector<TableRow> tables_report()
{
    struct Reference {
        FamilyKind kind;
        std::int64_t t;
        const char* ideal;
        const char* minimal;
    };
    static const Reference rows[] = {
        {FamilyKind::Imaginary, 1, "⟨2, (1−√−15)/2⟩", "±2, ±(1−√−15)/2"},
        {FamilyKind::Imaginary, 3, "⟨4, (3−√−55)/2⟩", "±4, ±(3−√−55)/2"},
        {FamilyKind::Imaginary, 5, "⟨6, (5−√−119)/2⟩", "±6, ±(5−√−119)/2"},
        {FamilyKind::Imaginary, 7, "⟨8, (7−√−207)/2⟩", "±8, ±(7−√−207)/2"},
        {FamilyKind::Real, 5, "⟨7, (7−√21)/2⟩", "±(7 ± √21)/2"},
        {FamilyKind::Real, 13, "⟨15, (15−√165)/2⟩", "±(15 ± √165)/2"},
        {FamilyKind::Real, 17, "⟨19, (19−√285)/2⟩", "±(19 ± √285)/2"},
        {FamilyKind::Real, 31, "⟨33, (33−√957)/2⟩", "±(33 ± √957)/2"},
    };
    std::vector<TableRow> out;
    for (const auto& p : rows) {
        const FamilyInstance inst = family_instance(p.kind, p.t);
        TableRow row{p.kind, p.t, inst.D, format_ideal(inst.triple), format_minimal_elements(inst.triple),
                     p.ideal, p.minimal, inst.triple.order.maximal()};
        out.push_back(std::move(row));
    }
    return out;
}

// ---------------------------------------------------------------------------
// output

namespace {

std::size_t display_width(const std::string& s)
{
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
        return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
}

std::string pad(const std::string& s, std::size_t width)
{
    const std::size_t w = display_width(s);
    return w >= width ? s + " " : s + std::string(width - w, ' ');
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

const char* tf(bool b) { return b ? "true" : "false"; }

const char* kind_name(FamilyKind k) { return k == FamilyKind::Imaginary ? "imaginary" : "real"; }

Json record_json(const SurveyRecord& r)
{
    return Json{{"D", r.D},
                {"a", r.a},
                {"b", r.b},
                {"g", r.g},
                {"norm", r.norm},
                {"minimum_num", to_int64(r.minimum.get_num())},
                {"minimum_den", to_int64(r.minimum.get_den())},
                {"n_minimal", r.n_minimal},
                {"wr", r.wr},
                {"hexagonal", r.hexagonal},
                {"bound_ok", r.bound_ok},
                {"order_maximal", r.order_maximal}};
}

Json summary_json(const SurveySummary& s)
{
    return Json{{"fields", s.fields}, {"records", s.records}, {"wr", s.wr}, {"hexagonal", s.hexagonal},
                {"bound_ok", s.bound_ok}};
}

}  // namespace

void write_records(std::ostream& os, const std::vector<SurveyRecord>& records, OutputFormat fmt,
                   const std::optional<SurveySummary>& summary)
{
    switch (fmt) {
    case OutputFormat::Json: {
        Json j;
        j["records"] = Json::array();
        for (const auto& r : records) j["records"].push_back(record_json(r));
        if (summary) j["summary"] = summary_json(*summary);
        os << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << "D,a,b,g,norm,minimum_num,minimum_den,n_minimal,wr,hexagonal,order_maximal\n";
        for (const auto& r : records) {
            os << r.D << ',' << r.a << ',' << r.b << ',' << r.g << ',' << r.norm << ',' << r.minimum.get_num() << ','
               << r.minimum.get_den() << ',' << r.n_minimal << ',' << tf(r.wr) << ',' << tf(r.hexagonal) << ','
               << tf(r.order_maximal) << '\n';
        }
        break;
    case OutputFormat::Text:
        os << pad("D", 8) << pad("(a,b,g)", 16) << pad("norm", 8) << pad("minimum", 12) << pad("#min", 6)
           << pad("WR", 7) << pad("hex", 7) << "maximal\n";
        for (const auto& r : records) {
            os << pad(std::to_string(r.D), 8)
               << pad("(" + std::to_string(r.a) + "," + std::to_string(r.b) + "," + std::to_string(r.g) + ")", 16)
               << pad(std::to_string(r.norm), 8) << pad(to_string(r.minimum), 12)
               << pad(std::to_string(r.n_minimal), 6) << pad(tf(r.wr), 7) << pad(tf(r.hexagonal), 7)
               << tf(r.order_maximal) << '\n';
        }
        if (summary) {
            os << "# fields=" << summary->fields << " records=" << summary->records << " wr=" << summary->wr
               << " hexagonal=" << summary->hexagonal << " bound_ok=" << summary->bound_ok << '\n';
        }
        break;
    }
}

std::vector<SurveyRecord> records_from_json(const std::string& text)
{
    const Json j = Json::parse(text);
    std::vector<SurveyRecord> out;
    for (const auto& e : j.at("records")) {
        SurveyRecord r;
        r.D = e.at("D").get<std::int64_t>();
        r.a = e.at("a").get<std::int64_t>();
        r.b = e.at("b").get<std::int64_t>();
        r.g = e.at("g").get<std::int64_t>();
        r.norm = e.at("norm").get<std::int64_t>();
        r.minimum = make_rational(Integer(e.at("minimum_num").get<long>()), Integer(e.at("minimum_den").get<long>()));
        r.n_minimal = e.at("n_minimal").get<std::size_t>();
        r.wr = e.at("wr").get<bool>();
        r.hexagonal = e.at("hexagonal").get<bool>();
        r.bound_ok = e.at("bound_ok").get<bool>();
        r.order_maximal = e.at("order_maximal").get<bool>();
        out.push_back(std::move(r));
    }
    return out;
}

void write_tables(std::ostream& os, const std::vector<TableRow>& rows, OutputFormat fmt)
{
    switch (fmt) {
    case OutputFormat::Json: {
        Json j = Json::array();
        for (const auto& r : rows) {
            j.push_back(Json{{"kind", kind_name(r.kind)},
                             {"t", r.t},
                             {"D", r.D},
                             {"ideal", r.ideal},
                             {"minimal_elements", r.minimal_elements},
                             {"expected_ideal", r.expected_ideal},
                             {"expected_minimal_elements", r.expected_minimal_elements},
                             {"match", r.match()},
                             {"order_maximal", r.order_maximal}});
        }
        os << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << "kind,t,D,ideal,minimal_elements,match,order_maximal\n";
        for (const auto& r : rows) {
            os << kind_name(r.kind) << ',' << r.t << ',' << r.D << ',' << csv_field(r.ideal) << ','
               << csv_field(r.minimal_elements) << ',' << tf(r.match()) << ',' << tf(r.order_maximal) << '\n';
        }
        break;
    case OutputFormat::Text: {
        std::optional<FamilyKind> current;
        for (const auto& r : rows) {
            if (current != r.kind) {
                if (current) os << '\n';
                os << (r.kind == FamilyKind::Imaginary ? "Imaginary quadratic fields\n"
                                                        : "Real quadratic fields\n");
                os << pad("D", 8) << pad("ideal", 24) << pad("minimal elements", 24) << "status\n";
                current = r.kind;
            }
            os << pad(std::to_string(r.D), 8) << pad(r.ideal, 24) << pad(r.minimal_elements, 24)
               << (r.match() ? "MATCH" : "MISMATCH");
            if (!r.order_maximal) os << "  (order_maximal=false)";
            os << '\n';
        }
        break;
    }
    }
}

void write_cyclo(std::ostream& os, std::int64_t k, const CyclotomicCheck& c, OutputFormat fmt)
{
    const std::int64_t phi = euler_phi(k);
    switch (fmt) {
    case OutputFormat::Json: {
        Json j{{"k", k},
               {"phi", phi},
               {"minimum", to_string(c.minimum)},
               {"expected_minimum", to_string(c.expected)},
               {"n_minimal", c.n_minimal},
               {"expected_count", c.expected_count},
               {"wr", c.wr},
               {"roots_of_unity_minimal", c.roots_of_unity_minimal},
               {"pass", c.pass()}};
        os << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << "k,phi,minimum,expected_minimum,n_minimal,expected_count,wr,roots_of_unity_minimal,pass\n"
           << k << ',' << phi << ',' << to_string(c.minimum) << ',' << to_string(c.expected) << ',' << c.n_minimal
           << ',' << c.expected_count << ',' << tf(c.wr) << ',' << tf(c.roots_of_unity_minimal) << ','
           << tf(c.pass()) << '\n';
        break;
    case OutputFormat::Text:
        os << "Q(zeta_" << k << "), degree " << phi << '\n'
           << "  minimum          " << to_string(c.minimum) << " (expected " << to_string(c.expected) << ")\n"
           << "  minimal vectors  " << c.n_minimal << " (expected " << c.expected_count << ")\n"
           << "  roots of unity   " << (c.roots_of_unity_minimal ? "all minimal" : "NOT all minimal") << '\n'
           << "  well-rounded     " << tf(c.wr) << '\n'
           << (c.pass() ? "PASS" : "FAIL") << (c.n_minimal == 6 && phi == 2 ? " (hexagonal)" : "") << '\n';
        break;
    }
}

void write_family(std::ostream& os, const std::vector<FamilyInstance>& instances, OutputFormat fmt)
{
    struct Row {
        const FamilyInstance* inst;
        bool matches;
        std::size_t n_minimal;
    };
    std::vector<Row> rows;
    for (const auto& inst : instances)
        rows.push_back({&inst, closed_form_matches(inst), minimal_vectors(inst.closed_form).vectors.size()});

    switch (fmt) {
    case OutputFormat::Json: {
        Json j = Json::array();
        for (const auto& r : rows) {
            const auto& i = *r.inst;
            j.push_back(Json{{"kind", kind_name(i.kind)},
                             {"t", i.t},
                             {"D", i.D},
                             {"a", i.triple.a},
                             {"b", i.triple.b},
                             {"g", i.triple.g},
                             {"c1", to_string(i.closed_form.c1)},
                             {"c2", to_string(i.closed_form.c2)},
                             {"c3", to_string(i.closed_form.c3)},
                             {"p_prime", i.filters.p_prime},
                             {"squarefree", i.filters.squarefree},
                             {"form_matches", r.matches},
                             {"wr", r.n_minimal >= 4},
                             {"n_minimal", r.n_minimal}});
        }
        os << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << "kind,t,D,a,b,g,c1,c2,c3,p_prime,squarefree,form_matches,wr,n_minimal\n";
        for (const auto& r : rows) {
            const auto& i = *r.inst;
            os << kind_name(i.kind) << ',' << i.t << ',' << i.D << ',' << i.triple.a << ',' << i.triple.b << ','
               << i.triple.g << ',' << to_string(i.closed_form.c1) << ',' << to_string(i.closed_form.c2) << ','
               << to_string(i.closed_form.c3) << ',' << tf(i.filters.p_prime) << ',' << tf(i.filters.squarefree)
               << ',' << tf(r.matches) << ',' << tf(r.n_minimal >= 4) << ',' << r.n_minimal << '\n';
        }
        break;
    case OutputFormat::Text:
        os << pad("t", 6) << pad("D", 10) << pad("ideal", 26) << pad("form", 28) << pad("sqfree", 8)
           << pad("prime", 7) << "check\n";
        for (const auto& r : rows) {
            const auto& i = *r.inst;
            const std::string form = to_string(i.closed_form.c1) + "m² + " + to_string(i.closed_form.c2) + "mn + " +
                                     to_string(i.closed_form.c3) + "n²";
            os << pad(std::to_string(i.t), 6) << pad(std::to_string(i.D), 10) << pad(format_ideal(i.triple), 26)
               << pad(form, 28) << pad(tf(i.filters.squarefree), 8) << pad(tf(i.filters.p_prime), 7)
               << (r.matches && r.n_minimal == 4 ? "ok" : "MISMATCH") << '\n';
        }
        break;
    }
}

}  // namespace wrlat
