#include "ccwb/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ccwb {

namespace {

std::vector<std::vector<std::string>> read_csv(const std::string& path, size_t min_cols) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool header_seen = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() < min_cols)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed row");
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace

bool PropFixtureRow::claims(const std::string& flag) const {
    size_t pos = 0;
    while (pos <= group.size()) {
        size_t next = group.find('+', pos);
        std::string tok = group.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok == flag) return true;
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return false;
}

std::vector<EquivFixtureRow> load_equiv_fixture(const std::string& path) {
    std::vector<EquivFixtureRow> out;
    for (auto& c : read_csv(path, 6)) {
        EquivFixtureRow r;
        r.q = std::stoi(c[0]);
        r.n = std::stoi(c[1]);
        r.a = c[2];
        r.g1 = c[3];
        r.g2 = c[4];
        r.expect = (c[5] == "True" || c[5] == "true" || c[5] == "1");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CountFixtureRow> load_count_fixture(const std::string& path) {
    std::vector<CountFixtureRow> out;
    for (auto& c : read_csv(path, 5)) {
        CountFixtureRow r;
        r.q = std::stoi(c[0]);
        r.n = std::stoi(c[1]);
        r.a = c[2];
        r.total = std::stoull(c[3]);
        r.new_count = std::stoull(c[4]);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<PropFixtureRow> load_prop_fixture(const std::string& path) {
    std::vector<PropFixtureRow> out;
    for (auto& c : read_csv(path, 8)) {
        PropFixtureRow r;
        r.group = c[0];
        r.n = std::stoi(c[1]);
        r.k = std::stoi(c[2]);
        r.d = std::stoi(c[3]);
        r.q = std::stoi(c[4]);
        r.a = c[5];
        r.kind = c[6];
        r.poly = c[7];
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ChainFixtureRow> load_chain_fixture(const std::string& path) {
    std::vector<ChainFixtureRow> out;
    for (auto& c : read_csv(path, 4)) {
        ChainFixtureRow r;
        r.name = c[0];
        r.n = std::stoi(c[1]);
        r.k = std::stoi(c[2]);
        r.d = std::stoi(c[3]);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CxFixtureRow> load_cx_fixture(const std::string& path) {
    std::vector<CxFixtureRow> out;
    for (auto& c : read_csv(path, 4)) {
        CxFixtureRow r;
        r.role = c[0];
        r.n = std::stoi(c[1]);
        r.k = std::stoi(c[2]);
        r.d = std::stoi(c[3]);
        if (c.size() > 4) r.a = c[4];
        if (c.size() > 5) r.g = c[5];
        out.push_back(std::move(r));
    }
    return out;
}

RootCodeFixture load_root_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    RootCodeFixture r;
    std::string header;
    std::getline(in, header);
    std::stringstream ss(header);
    std::string tok;
    while (ss >> tok) {
        if (tok.rfind("q=", 0) == 0) r.q = std::stoi(tok.substr(2));
        if (tok.rfind("n=", 0) == 0) r.n = std::stoi(tok.substr(2));
        if (tok.rfind("a=", 0) == 0) r.a = tok.substr(2);
    }
    std::getline(in, r.g);
    if (r.q == 0 || r.n == 0 || r.a.empty() || r.g.empty())
        throw std::runtime_error("malformed root-code fixture " + path);
    return r;
}

}  // namespace ccwb
