#include "hodge/records.hpp"

#include <json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace hodge {

namespace {

constexpr std::string_view kCsvHeader = "family,degree,i,g,value,path";
constexpr std::string_view kCacheMagic = "hodge-series-cache v1";

int parse_int(std::string_view text, const char* what)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw RecordFormatError(std::string("malformed ") + what + ": '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> fields;
    size_t start = 0;
    for (size_t pos = 0; pos <= line.size(); ++pos) {
        if (pos == line.size() || line[pos] == sep) {
            fields.push_back(line.substr(start, pos - start));
            start = pos + 1;
        }
    }
    return fields;
}

bool valid_path(std::string_view path)
{
    return path == "closed-form" || path == "recursion" || path == "both-agree";
}

OutputRecord record_from_fields(const std::vector<std::string_view>& fields)
{
    if (fields.size() != 6)
        throw RecordFormatError("CSV row does not have 6 fields");
    const auto family = family_from_letter(fields[0]);
    if (!family)
        throw RecordFormatError("unknown family '" + std::string(fields[0]) + "'");
    OutputRecord rec;
    rec.family = *family;
    rec.degree = parse_int(fields[1], "degree");
    rec.i = fields[2].empty() ? -1 : parse_int(fields[2], "index i");
    if ((rec.family == Family::T) != fields[2].empty())
        throw RecordFormatError("index i must be present exactly for families D and V");
    rec.g = parse_int(fields[3], "genus");
    try {
        rec.value = parse_rational(fields[4]);
    } catch (const std::invalid_argument& err) {
        throw RecordFormatError(err.what());
    }
    if (!valid_path(fields[5]))
        throw RecordFormatError("unknown path tag '" + std::string(fields[5]) + "'");
    rec.path = std::string(fields[5]);
    return rec;
}

void append_csv_row(std::ostringstream& out, const OutputRecord& rec)
{
    out << family_letter(rec.family) << ',' << rec.degree << ',';
    if (rec.i >= 0)
        out << rec.i;
    out << ',' << rec.g << ',' << to_string(rec.value) << ',' << rec.path << '\n';
}

} // namespace

std::string render_csv(const std::vector<OutputRecord>& records)
{
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const OutputRecord& rec : records)
        append_csv_row(out, rec);
    return out.str();
}

std::vector<OutputRecord> parse_csv(std::string_view text)
{
    std::vector<OutputRecord> records;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw RecordFormatError("missing CSV header line");
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        records.push_back(record_from_fields(split(line, ',')));
    }
    return records;
}

std::string render_json(int degree, int gmax, const std::vector<OutputRecord>& records)
{
    nlohmann::ordered_json doc;
    doc["config"] = {{"degree", degree}, {"gmax", gmax}};
    doc["records"] = nlohmann::ordered_json::array();
    for (const OutputRecord& rec : records) {
        nlohmann::ordered_json row;
        row["family"] = std::string(1, family_letter(rec.family));
        row["degree"] = rec.degree;
        if (rec.i >= 0)
            row["i"] = rec.i;
        row["g"] = rec.g;
        row["value"] = to_string(rec.value);
        row["path"] = rec.path;
        doc["records"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

std::vector<OutputRecord> parse_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw RecordFormatError(std::string("malformed JSON: ") + err.what());
    }
    std::vector<OutputRecord> records;
    try {
        for (const auto& row : doc.at("records")) {
            OutputRecord rec;
            const auto family = family_from_letter(row.at("family").get<std::string>());
            if (!family)
                throw RecordFormatError("unknown family in JSON record");
            rec.family = *family;
            rec.degree = row.at("degree").get<int>();
            rec.i = row.contains("i") ? row.at("i").get<int>() : -1;
            rec.g = row.at("g").get<int>();
            rec.value = parse_rational(row.at("value").get<std::string>());
            rec.path = row.at("path").get<std::string>();
            if (!valid_path(rec.path))
                throw RecordFormatError("unknown path tag in JSON record");
            records.push_back(std::move(rec));
        }
    } catch (const nlohmann::json::exception& err) {
        throw RecordFormatError(std::string("malformed JSON record: ") + err.what());
    } catch (const std::invalid_argument& err) {
        throw RecordFormatError(err.what());
    }
    return records;
}

std::string render_pretty(int degree, int gmax, const std::vector<OutputRecord>& records)
{
    std::ostringstream out;
    out << "degree=" << degree << " gmax=" << gmax << '\n';
    out << std::left << std::setw(8) << "family" << std::setw(4) << "i"
        << std::setw(4) << "g" << std::setw(24) << "value" << "path" << '\n';
    for (const OutputRecord& rec : records) {
        out << std::setw(8) << family_letter(rec.family)
            << std::setw(4) << (rec.i >= 0 ? std::to_string(rec.i) : "-")
            << std::setw(4) << rec.g
            << std::setw(24) << to_string(rec.value)
            << rec.path << '\n';
    }
    out << records.size() << " values\n";
    return out.str();
}

std::vector<OutputRecord> records_from_table(const IntegralTable& table, int degree)
{
    std::vector<OutputRecord> records;
    records.reserve(static_cast<size_t>(table.size()));
    for (const auto& [key, entry] : table)
        records.push_back({key.family, degree, key.i, key.g, entry.value,
                           std::string(provenance_label(entry.provenance))});
    return records;
}

std::string render_cache(const CacheFile& cache)
{
    std::ostringstream out;
    out << kCacheMagic << " degree=" << cache.degree << " gmax=" << cache.gmax << '\n';
    out << render_csv(cache.records);
    return out.str();
}

CacheFile parse_cache(std::string_view text)
{
    const size_t newline = text.find('\n');
    if (newline == std::string_view::npos)
        throw CacheError("cache file: missing header line");
    const std::string_view header = text.substr(0, newline);

    std::istringstream in{std::string(header)};
    std::string word1, word2, deg_field, gmax_field;
    if (!(in >> word1 >> word2 >> deg_field >> gmax_field) ||
        word1 + " " + word2 != kCacheMagic ||
        deg_field.rfind("degree=", 0) != 0 || gmax_field.rfind("gmax=", 0) != 0)
        throw CacheError("cache file: bad header '" + std::string(header) + "'");
    std::string trailing;
    if (in >> trailing)
        throw CacheError("cache file: bad header '" + std::string(header) + "'");

    CacheFile cache;
    try {
        cache.degree = parse_int(std::string_view(deg_field).substr(7), "cache degree");
        cache.gmax = parse_int(std::string_view(gmax_field).substr(5), "cache gmax");
        cache.records = parse_csv(text.substr(newline + 1));
    } catch (const RecordFormatError& err) {
        throw CacheError(std::string("cache file: ") + err.what());
    }
    return cache;
}

std::optional<CacheFile> read_cache_file(const std::string& path)
{
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
        return std::nullopt;
    std::ifstream in(path, std::ios::binary);
    if (!in.is_open())
        throw CacheError("cache file: cannot open '" + path + "'");
    std::ostringstream content;
    content << in.rdbuf();
    if (in.bad())
        throw CacheError("cache file: read error on '" + path + "'");
    return parse_cache(content.str());
}

void write_cache_file(const std::string& path, const CacheFile& cache)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out.is_open())
        throw CacheError("cache file: cannot open '" + path + "' for writing");
    out << render_cache(cache);
    out.flush();
    if (!out)
        throw CacheError("cache file: write error on '" + path + "'");
}

} // namespace hodge
