#include "ccwb/bklc.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ccwb {

void BklcTable::insert(int q, int n, int k, int d) {
    if (d > n - k + 1)
        throw std::invalid_argument("entry violates the Singleton bound: d=" + std::to_string(d) +
                                    " > n-k+1=" + std::to_string(n - k + 1));
    auto key = std::make_tuple(q, n, k);
    if (entries_.count(key))
        throw std::invalid_argument("duplicate entry for (" + std::to_string(q) + "," +
                                    std::to_string(n) + "," + std::to_string(k) + ")");
    entries_[key] = d;
}

int BklcTable::lookup(int q, int n, int k) const {
    auto it = entries_.find(std::make_tuple(q, n, k));
    if (it == entries_.end())
        throw std::out_of_range("no table entry for (" + std::to_string(q) + "," +
                                std::to_string(n) + "," + std::to_string(k) + ")");
    return it->second;
}

bool BklcTable::has(int q, int n, int k) const {
    return entries_.count(std::make_tuple(q, n, k)) > 0;
}

BklcTable load_bklc(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    BklcTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (lineno == 1 && line.rfind("q,", 0) == 0) continue;  // header
        std::istringstream ss(line);
        int vals[4];
        char comma;
        for (int i = 0; i < 4; ++i) {
            if (!(ss >> vals[i])) throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                                           ": malformed row");
            if (i < 3 && !(ss >> comma)) throw std::runtime_error(path + ":" +
                                                                  std::to_string(lineno) +
                                                                  ": malformed row");
        }
        try {
            t.insert(vals[0], vals[1], vals[2], vals[3]);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return t;
}

}  // namespace ccwb
