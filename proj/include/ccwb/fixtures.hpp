#ifndef CCWB_FIXTURES_HPP
#define CCWB_FIXTURES_HPP

#include <string>
#include <vector>

namespace ccwb {

// Loaders for the reference-data CSV files under data/.  Lines starting
// with '#' are comments; the first non-comment line is the header.

struct EquivFixtureRow {
    int q = 0, n = 0;
    std::string a, g1, g2;
    bool expect = false;
};

struct CountFixtureRow {
    int q = 0, n = 0;
    std::string a;
    unsigned long long total = 0, new_count = 0;
};

struct PropFixtureRow {
    std::string group;
    int n = 0, k = 0, d = 0, q = 0;
    std::string a, kind, poly;

    bool claims(const std::string& flag) const;  // e.g. claims("so")
};

struct ChainFixtureRow {
    std::string name;
    int n = 0, k = 0, d = 0;
};

struct CxFixtureRow {
    std::string role;
    int n = 0, k = 0, d = 0;
    std::string a, g;
};

std::vector<EquivFixtureRow> load_equiv_fixture(const std::string& path);
std::vector<CountFixtureRow> load_count_fixture(const std::string& path);
std::vector<PropFixtureRow> load_prop_fixture(const std::string& path);
std::vector<ChainFixtureRow> load_chain_fixture(const std::string& path);
std::vector<CxFixtureRow> load_cx_fixture(const std::string& path);

// root_code_gf7.txt: one "q=.. n=.. a=.." line plus the generator string
struct RootCodeFixture {
    int q = 0, n = 0;
    std::string a, g;
};
RootCodeFixture load_root_code(const std::string& path);

}  // namespace ccwb

#endif
