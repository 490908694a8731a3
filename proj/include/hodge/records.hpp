#pragma once

#include "hodge/engine.hpp"
#include "hodge/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hodge {

// One emitted table row. CSV column order is fixed:
//   family,degree,i,g,value,path
// i is absent (empty CSV field, omitted JSON key) for family T and is
// stored as -1. value always round-trips through its exact "p/q" rendering.
struct OutputRecord {
    Family family;
    int degree;
    int i; // -1 = absent
    int g;
    Rational value;
    std::string path; // "closed-form" | "recursion" | "both-agree"

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

struct RecordFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string render_csv(const std::vector<OutputRecord>& records);
std::string render_json(int degree, int gmax, const std::vector<OutputRecord>& records);
std::string render_pretty(int degree, int gmax, const std::vector<OutputRecord>& records);

// Inverses of the renderers; throw RecordFormatError on malformed input.
std::vector<OutputRecord> parse_csv(std::string_view text);
std::vector<OutputRecord> parse_json(std::string_view text);

std::vector<OutputRecord> records_from_table(const IntegralTable& table, int degree);

// Cache file = one header line "hodge-series-cache v1 degree=<d> gmax=<G>"
// followed by the CSV format above.
struct CacheFile {
    int degree = 0;
    int gmax = 0;
    std::vector<OutputRecord> records;
};

std::string render_cache(const CacheFile& cache);

// Parses a cache file; throws CacheError when the header or any row is
// malformed.
CacheFile parse_cache(std::string_view text);

// Reads path if it exists. nullopt = no such file; CacheError = unreadable
// or corrupt content.
std::optional<CacheFile> read_cache_file(const std::string& path);

void write_cache_file(const std::string& path, const CacheFile& cache);

} // namespace hodge
