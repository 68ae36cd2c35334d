#pragma once

// Artifact plumbing: CSV writers rounded to 10 significant digits, the JSON
// run summary, golden-file check/update, and the config hash.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace todakdv {

// fixed rounding for every numeric artifact value: below the eigensolver
// noise floor, above platform FP variation
inline std::string round10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

class CsvTable {
  public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    CsvTable& begin_row() {
        rows_.emplace_back();
        return *this;
    }
    CsvTable& cell(double v) {
        rows_.back().push_back(round10(v));
        return *this;
    }
    CsvTable& cell(int v) {
        rows_.back().push_back(std::to_string(v));
        return *this;
    }
    CsvTable& cell(const std::string& v) {
        rows_.back().push_back(v);
        return *this;
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < header_.size(); ++i)
            os << (i ? "," : "") << header_[i];
        os << "\n";
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
            os << "\n";
        }
        return os.str();
    }

    void write(const std::filesystem::path& p) const {
        std::ofstream f(p, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + p.string());
        f << str();
    }

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

// FNV-1a over the canonical config serialization
inline std::string config_hash(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

struct GoldenDiff {
    std::string file;
    int line = 0;
    std::string detail;
};

struct GoldenResult {
    bool ok = true;
    std::vector<GoldenDiff> diffs;
};

inline GoldenResult golden_check(const std::filesystem::path& run_dir,
                                 const std::filesystem::path& golden_dir) {
    namespace fs = std::filesystem;
    GoldenResult res;
    if (!fs::exists(golden_dir)) {
        res.ok = false;
        res.diffs.push_back({golden_dir.string(), 0,
                             "golden directory missing; run 'toda-kdv golden update' first"});
        return res;
    }
    for (const auto& e : fs::directory_iterator(run_dir)) {
        if (e.path().extension() != ".csv") continue;
        fs::path g = golden_dir / e.path().filename();
        if (!fs::exists(g)) {
            res.ok = false;
            res.diffs.push_back({g.string(), 0, "missing golden file; run golden update"});
            continue;
        }
        std::ifstream fa(e.path()), fb(g);
        std::string la, lb;
        int line = 0;
        while (true) {
            bool ga = static_cast<bool>(std::getline(fa, la));
            bool gb = static_cast<bool>(std::getline(fb, lb));
            ++line;
            if (!ga && !gb) break;
            if (ga != gb || la != lb) {
                res.ok = false;
                res.diffs.push_back({e.path().filename().string(), line,
                                     "'" + (ga ? la : std::string("<eof>")) + "' vs '" +
                                         (gb ? lb : std::string("<eof>")) + "'"});
                break;
            }
        }
    }
    return res;
}

inline void golden_update(const std::filesystem::path& run_dir,
                          const std::filesystem::path& golden_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(golden_dir);
    for (const auto& e : fs::directory_iterator(run_dir)) {
        if (e.path().extension() != ".csv") continue;
        fs::copy_file(e.path(), golden_dir / e.path().filename(),
                      fs::copy_options::overwrite_existing);
    }
}

}  // namespace todakdv
