#ifndef CCWB_BKLC_HPP
#define CCWB_BKLC_HPP

#include <map>
#include <string>
#include <tuple>

namespace ccwb {

// Best-known-distance snapshot, loaded from a CSV with header "q,n,k,d".
// Lookups of missing (q, n, k) keys are errors surfaced to the caller.
class BklcTable {
  public:
    void insert(int q, int n, int k, int d);  // rejects duplicates and d > n-k+1
    int lookup(int q, int n, int k) const;    // throws on missing key
    bool has(int q, int n, int k) const;
    size_t size() const { return entries_.size(); }

  private:
    std::map<std::tuple<int, int, int>, int> entries_;
};

BklcTable load_bklc(const std::string& path);

}  // namespace ccwb

#endif
