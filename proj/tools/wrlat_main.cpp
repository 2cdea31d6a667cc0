// wrlat: classify well-rounded ideal lattices from quadratic and cyclotomic fields.
//
// Exit codes: 0 success (classify: WR), 1 classify: not WR, 2 invalid input, 3 invariant violation.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wrlat/survey.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotWr = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInvariant = 3;

struct OutputOptions {
    std::string format = "text";
    std::string out;
};

void add_output_options(CLI::App* cmd, OutputOptions& o, const std::string& default_format)
{
    o.format = default_format;
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out, "Write output to PATH instead of standard output");
}

// Routes output to --out when given.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw wrlat::InvalidInput("cannot open output file '" + path + "'");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void finish()
    {
        stream().flush();
        if (!stream()) throw wrlat::InvalidInput("write failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw wrlat::InvalidInput("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Well-rounded ideal lattices from quadratic and cyclotomic number fields"};
    app.require_subcommand(1);

    // classify
    auto* classify = app.add_subcommand("classify", "Classify the lattice of the ideal <a, b + g*delta> in Z[delta]");
    std::int64_t c_D = 0, c_a = 0, c_b = 0, c_g = 0;
    OutputOptions c_out;
    classify->add_option("D", c_D, "Signed radicand (negative for imaginary fields)")->required();
    classify->add_option("a", c_a)->required();
    classify->add_option("b", c_b)->required();
    classify->add_option("g", c_g)->required();
    add_output_options(classify, c_out, "text");

    // survey
    auto* survey = app.add_subcommand("survey", "Classify every ideal up to a norm bound over a range of radicands");
    wrlat::SurveyConfig s_cfg;
    std::string s_config_path;
    OutputOptions s_out;
    survey->add_option("--config", s_config_path, "key=value or JSON file mirroring the survey options");
    auto* o_dmin = survey->add_option("--d-min", s_cfg.d_min, "Smallest radicand");
    auto* o_dmax = survey->add_option("--d-max", s_cfg.d_max, "Largest radicand");
    auto* o_norm = survey->add_option("--norm-bound", s_cfg.norm_bound, "Largest ideal norm");
    auto* o_sqf = survey->add_flag("--squarefree", s_cfg.require_squarefree, "Only squarefree radicands");
    auto* o_workers = survey->add_option("--workers", s_cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    add_output_options(survey, s_out, "json");
    auto* o_format = survey->get_option("--format");

    // tables
    auto* tables = app.add_subcommand("tables", "Regenerate the two example tables of WR ideal lattices");
    OutputOptions t_out;
    add_output_options(tables, t_out, "text");

    // family
    auto* family = app.add_subcommand("family", "List members of the imaginary or real WR family");
    std::string f_kind = "imaginary";
    std::int64_t f_tmax = 15;
    bool f_sqf = false;
    bool f_prime = false;
    OutputOptions f_out;
    family->add_option("--kind", f_kind)->check(CLI::IsMember({"imaginary", "real"}))->capture_default_str();
    family->add_option("--t-max", f_tmax, "Largest parameter t")->capture_default_str();
    family->add_flag("--squarefree", f_sqf, "Only squarefree D");
    family->add_flag("--prime", f_prime, "Only t with t+2 prime");
    add_output_options(family, f_out, "text");

    // cyclo
    auto* cyclo = app.add_subcommand("cyclo", "Verify minimum and minimal vectors of the lattice of Z[zeta_k]");
    std::int64_t k = 0;
    OutputOptions k_out;
    cyclo->add_option("k", k, "Cyclotomic index (k >= 3, phi(k) <= 24)")->required();
    add_output_options(cyclo, k_out, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*classify) {
            const auto rec = wrlat::classify(c_D, c_a, c_b, c_g);
            Sink sink(c_out.out);
            wrlat::write_records(sink.stream(), {rec}, wrlat::parse_format(c_out.format));
            sink.finish();
            return rec.wr ? kExitOk : kExitNotWr;
        }
        if (*survey) {
            wrlat::SurveyConfig cfg;
            if (!s_config_path.empty()) cfg = wrlat::parse_config(read_file(s_config_path));
            if (o_dmin->count()) cfg.d_min = s_cfg.d_min;
            if (o_dmax->count()) cfg.d_max = s_cfg.d_max;
            if (o_norm->count()) cfg.norm_bound = s_cfg.norm_bound;
            if (o_sqf->count()) cfg.require_squarefree = s_cfg.require_squarefree;
            if (o_workers->count()) cfg.workers = s_cfg.workers;
            if (o_format->count() || s_config_path.empty()) cfg.output_format = wrlat::parse_format(s_out.format);
            const auto result = wrlat::run_survey(cfg);
            Sink sink(s_out.out);
            wrlat::write_records(sink.stream(), result.records, cfg.output_format, result.summary);
            sink.finish();
            if (cfg.output_format == wrlat::OutputFormat::Csv) {
                std::cerr << "# fields=" << result.summary.fields << " records=" << result.summary.records
                          << " wr=" << result.summary.wr << " hexagonal=" << result.summary.hexagonal
                          << " bound_ok=" << result.summary.bound_ok << '\n';
            }
            return kExitOk;
        }
        if (*tables) {
            const auto rows = wrlat::tables_report();
            Sink sink(t_out.out);
            wrlat::write_tables(sink.stream(), rows, wrlat::parse_format(t_out.format));
            sink.finish();
            for (const auto& r : rows)
                if (!r.match()) return kExitInvariant;
            return kExitOk;
        }
        if (*family) {
            const auto kind = f_kind == "real" ? wrlat::FamilyKind::Real : wrlat::FamilyKind::Imaginary;
            const auto instances = wrlat::family_stream(kind, f_tmax, f_sqf, f_prime);
            Sink sink(f_out.out);
            wrlat::write_family(sink.stream(), instances, wrlat::parse_format(f_out.format));
            sink.finish();
            for (const auto& inst : instances)
                if (!wrlat::closed_form_matches(inst)) return kExitInvariant;
            return kExitOk;
        }
        if (*cyclo) {
            if (k < 3) throw wrlat::InvalidInput("k must be at least 3");
            if (wrlat::euler_phi(k) > static_cast<std::int64_t>(wrlat::kMaxEnumerationDim))
                throw wrlat::InvalidInput("phi(k) exceeds the enumeration guard");
            const auto field = wrlat::cyclo_field(k);
            const auto check = wrlat::verify_cyclotomic_theorem(field);
            Sink sink(k_out.out);
            wrlat::write_cyclo(sink.stream(), k, check, wrlat::parse_format(k_out.format));
            sink.finish();
            return check.pass() ? kExitOk : kExitInvariant;
        }
    } catch (const wrlat::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const wrlat::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitInvalid;
}
