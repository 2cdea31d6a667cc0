#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wrlat/cyclotomic.hpp"
#include "wrlat/wr_families.hpp"

namespace wrlat {

/// Classification of one quadratic ideal lattice.
struct SurveyRecord {
    std::int64_t D = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t g = 0;
    std::int64_t norm = 0;
    Rational minimum;
    std::size_t n_minimal = 0;
    bool wr = false;
    bool hexagonal = false;
    bool bound_ok = false;
    bool order_maximal = false;

    friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(const std::string& s);
std::string format_name(OutputFormat f);

struct SurveyConfig {
    std::int64_t d_min = -20;
    std::int64_t d_max = -1;
    std::int64_t norm_bound = 10;
    bool require_squarefree = false;
    OutputFormat output_format = OutputFormat::Json;
    unsigned workers = 1;

    /// Throws InvalidInput on d_min > d_max, norm_bound < 1 or workers == 0.
    void validate() const;
};

/// Reads flat `key = value` lines (# comments allowed) or a JSON object; keys mirror SurveyConfig fields.
SurveyConfig parse_config(const std::string& text, SurveyConfig base = {});

/// Throws InvalidInput for a bad radicand or triple.
SurveyRecord classify_ideal(const IdealTriple& t);
SurveyRecord classify(std::int64_t D, std::int64_t a, std::int64_t b, std::int64_t g);

struct SurveySummary {
    std::size_t fields = 0;
    std::size_t records = 0;
    std::size_t wr = 0;
    std::size_t hexagonal = 0;
    std::size_t bound_ok = 0;

    friend bool operator==(const SurveySummary&, const SurveySummary&) = default;
};

struct SurveyResult {
    std::vector<SurveyRecord> records;  // sorted by (D, norm, a, b, g)
    SurveySummary summary;
};

/// Radicands the survey visits: non-square D in [d_min, d_max], D != 0, 1.
std::vector<std::int64_t> survey_radicands(const SurveyConfig& cfg);

/// Throws InvariantViolation if any ideal violates the minimum bound. Output is independent of cfg.workers.
SurveyResult run_survey(const SurveyConfig& cfg);

struct TableRow {
    FamilyKind kind;
    std::int64_t t = 0;
    std::int64_t D = 0;
    std::string ideal;
    std::string minimal_elements;
    std::string expected_ideal;
    std::string expected_minimal_elements;
    bool order_maximal = false;

    bool match() const { return ideal == expected_ideal && minimal_elements == expected_minimal_elements; }
};

/// "⟨a, b+gδ⟩" with both generators rendered in sqrt(D) form.
std::string format_ideal(const IdealTriple& t);
/// Minimal elements up to sign, e.g. "±2, ±(1−√−15)/2" or "±(7 ± √21)/2".
std::string format_minimal_elements(const IdealTriple& t);

/// Both example tables regenerated from the families and compared with the reference rows.
std::vector<TableRow> tables_report();

// Serialisation.
void write_records(std::ostream& os, const std::vector<SurveyRecord>& records, OutputFormat fmt,
                   const std::optional<SurveySummary>& summary = std::nullopt);
void write_tables(std::ostream& os, const std::vector<TableRow>& rows, OutputFormat fmt);
void write_cyclo(std::ostream& os, std::int64_t k, const CyclotomicCheck& c, OutputFormat fmt);
void write_family(std::ostream& os, const std::vector<FamilyInstance>& instances, OutputFormat fmt);

/// Parses the JSON emitted by write_records.
std::vector<SurveyRecord> records_from_json(const std::string& text);

}  // namespace wrlat
