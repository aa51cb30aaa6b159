#include "ramsey/report.hpp"

#include <charconv>
#include <sstream>

namespace ramsey {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(const std::string& text, const std::string& context) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("bad integer '" + text + "' for " + context);
    return value;
}

nlohmann::ordered_json spec_json(const ProblemSpec& spec) {
    return {{"t", spec.t}, {"r", spec.r}, {"p", spec.p}};
}

nlohmann::ordered_json per_k_json(const std::vector<ExactCount>& per_k) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto& term : per_k) arr.push_back(to_decimal(term));
    return arr;
}

nlohmann::ordered_json engine_json(const EngineReport& report) {
    nlohmann::ordered_json j;
    j["engine"] = report.engine;
    j["n"] = report.n;
    j["n_w"] = to_decimal(report.n_w);
    j["total"] = to_decimal(report.total);
    j["is_witness"] = report.n_w == report.total;
    j["objects"] = report.objects;
    j["max_k"] = report.max_k;
    j["per_k"] = per_k_json(report.per_k);
    if (report.no_w_witness) j["no_w_witness"] = *report.no_w_witness;
    j["seconds"] = report.seconds;
    return j;
}

nlohmann::ordered_json header(const std::string& command, const ProblemSpec& spec) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["spec"] = spec_json(spec);
    return j;
}

void put_options(nlohmann::ordered_json& j, const EngineOptions& opt) {
    j["budget"] = opt.budget;
    j["workers"] = opt.workers;
    if (opt.k_cutoff) j["k_cutoff"] = *opt.k_cutoff;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

// Shared CSV columns; cells not applicable to a command stay empty.
const char* kCsvHeader =
    "command,t,r,p,n,engine,n_w,total,is_witness,agree,ramsey_n,kmax_bound,"
    "realized_max_k,seconds,objects,max_k";

struct CsvRow {
    std::string command, t, r, p, n, engine, n_w, total, is_witness, agree, ramsey_n,
        kmax_bound, realized_max_k, seconds, objects, max_k;

    std::string line() const {
        std::vector<const std::string*> cells = {&command,  &t,     &r,          &p,
                                                 &n,        &engine, &n_w,       &total,
                                                 &is_witness, &agree, &ramsey_n, &kmax_bound,
                                                 &realized_max_k, &seconds, &objects, &max_k};
        std::string out;
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += csv_quote(*cells[i]);
        }
        return out;
    }
};

CsvRow base_row(const nlohmann::ordered_json& doc) {
    CsvRow row;
    row.command = doc.at("command").get<std::string>();
    const auto& spec = doc.at("spec");
    row.t = std::to_string(spec.at("t").get<int>());
    row.r = std::to_string(spec.at("r").get<int>());
    row.p = join_ints(spec.at("p").get<std::vector<int>>());
    return row;
}

void fill_engine_cells(CsvRow& row, const nlohmann::ordered_json& engine) {
    row.n = std::to_string(engine.at("n").get<int>());
    row.engine = engine.at("engine").get<std::string>();
    row.n_w = engine.at("n_w").get<std::string>();
    row.total = engine.at("total").get<std::string>();
    row.is_witness = engine.at("is_witness").get<bool>() ? "true" : "false";
    std::ostringstream sec;
    sec << engine.at("seconds").get<double>();
    row.seconds = sec.str();
    row.objects = std::to_string(engine.at("objects").get<std::uint64_t>());
    row.max_k = std::to_string(engine.at("max_k").get<int>());
}

std::string to_csv(const nlohmann::ordered_json& doc) {
    std::vector<CsvRow> rows;
    const std::string command = doc.at("command").get<std::string>();
    if (command == "compute") {
        CsvRow row = base_row(doc);
        fill_engine_cells(row, doc.at("result"));
        rows.push_back(std::move(row));
    } else if (command == "search") {
        for (const auto& entry : doc.at("scan")) {
            CsvRow row = base_row(doc);
            fill_engine_cells(row, entry);
            if (doc.contains("ramsey_n")) row.ramsey_n = std::to_string(doc.at("ramsey_n").get<int>());
            rows.push_back(std::move(row));
        }
    } else if (command == "validate") {
        for (const auto& entry : doc.at("engines")) {
            CsvRow row = base_row(doc);
            fill_engine_cells(row, entry);
            row.agree = doc.at("agree").get<bool>() ? "true" : "false";
            row.kmax_bound = doc.at("kmax_bound").get<std::string>();
            row.realized_max_k = std::to_string(doc.at("realized_max_k").get<int>());
            rows.push_back(std::move(row));
        }
    } else if (command == "kmax") {
        CsvRow row = base_row(doc);
        row.n = std::to_string(doc.at("n").get<int>());
        row.kmax_bound = doc.at("bound").get<std::string>();
        if (doc.contains("realized")) row.realized_max_k = std::to_string(doc.at("realized").get<int>());
        rows.push_back(std::move(row));
    } else {
        throw std::logic_error("unknown command in report document");
    }
    std::string out = kCsvHeader;
    out += '\n';
    for (auto& row : rows) {
        out += row.line();
        out += '\n';
    }
    return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(parse_number<int>(trim(item), "list entry"));
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

ProblemFileConfig parse_problem_file(const std::string& text) {
    ProblemFileConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (value.empty())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": empty value");
        if (key == "t")
            cfg.t = parse_number<int>(value, key);
        else if (key == "r")
            cfg.r = parse_number<int>(value, key);
        else if (key == "p")
            cfg.p = parse_int_list(value);
        else if (key == "n")
            cfg.n = parse_number<int>(value, key);
        else if (key == "engine")
            cfg.engine = value;
        else if (key == "k_cutoff")
            cfg.k_cutoff = parse_number<int>(value, key);
        else if (key == "budget")
            cfg.budget = parse_number<std::uint64_t>(value, key);
        else if (key == "workers")
            cfg.workers = parse_number<int>(value, key);
        else
            throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" +
                                        key + "'");
    }
    return cfg;
}

nlohmann::ordered_json report_compute(const ProblemSpec& spec, const EngineReport& report,
                                      const EngineOptions& opt) {
    nlohmann::ordered_json doc = header("compute", spec);
    put_options(doc, opt);
    doc["result"] = engine_json(report);
    return doc;
}

nlohmann::ordered_json report_search(const ProblemSpec& spec, const SearchResult& result,
                                     EngineId engine, int n_max, const EngineOptions& opt) {
    nlohmann::ordered_json doc = header("search", spec);
    doc["engine"] = std::string(engine_name(engine));
    doc["n_max"] = n_max;
    put_options(doc, opt);
    doc["found"] = result.ramsey_n.has_value();
    if (result.ramsey_n) doc["ramsey_n"] = *result.ramsey_n;
    nlohmann::ordered_json scan = nlohmann::ordered_json::array();
    for (auto& report : result.per_n) scan.push_back(engine_json(report));
    doc["scan"] = scan;
    if (result.witness && result.witness_n) {
        doc["witness_n"] = *result.witness_n;
        doc["witness_coloring"] = *result.witness;
    }
    return doc;
}

nlohmann::ordered_json report_validate(const ProblemSpec& spec, const ValidationReport& result,
                                       const EngineOptions& opt) {
    nlohmann::ordered_json doc = header("validate", spec);
    doc["n"] = result.n;
    put_options(doc, opt);
    doc["agree"] = result.agree;
    nlohmann::ordered_json engines = nlohmann::ordered_json::array();
    for (auto& report : result.reports) engines.push_back(engine_json(report));
    doc["engines"] = engines;
    doc["failures"] = result.failures;
    doc["kmax_bound"] = to_decimal(result.kmax_bound);
    doc["realized_max_k"] = result.realized_max_k;
    return doc;
}

nlohmann::ordered_json report_kmax(const ProblemSpec& spec, int n, const ExactCount& bound,
                                   std::optional<int> realized) {
    nlohmann::ordered_json doc = header("kmax", spec);
    doc["n"] = n;
    doc["bound"] = to_decimal(bound);
    if (realized) doc["realized"] = *realized;
    return doc;
}

std::string render_report(const nlohmann::ordered_json& doc, ReportFormat format) {
    if (format == ReportFormat::json) return doc.dump(2) + "\n";
    return to_csv(doc);
}

}  // namespace ramsey
