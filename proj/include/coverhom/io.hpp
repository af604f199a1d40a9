// Text interchange formats (bit-exact round-trips) and a content-addressed
// result cache.
//
// Complex format, line oriented:
//   deltacomplex v1
//   dim D
//   counts c0 c1 ... cD
//   cells d            (for each d >= 1, followed by c_d face-tuple lines)
//   <f0 f1 ... fd>
//   provenance         (optional; c0 lines "dim cell")
//   end
// Face tuples are ordered; the i-th face carries the sign (-1)^i in the
// boundary operator.
//
// Chain format:
//   chain v1
//   degree d
//   terms t            (followed by t lines "cell coefficient")
//   end
//
// Bundle format: header lines (n, k, provenance, note*), then a complex
// block for L and chain blocks for S and (optionally) D.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "coverhom/bundle.hpp"
#include "coverhom/delta_complex.hpp"
#include "coverhom/small_cover.hpp"

namespace coverhom {

void write_complex(std::ostream& os, const DeltaComplex& x);
DeltaComplex read_complex(std::istream& is);

void write_chain(std::ostream& os, const Chain& c);
Chain read_chain(std::istream& is);

void write_bundle(std::ostream& os, const InstanceBundle& b);
InstanceBundle read_bundle(std::istream& is);

void write_bundle_file(const std::string& path, const InstanceBundle& b);

// Complex interchange format extended with one "cell coset" annotation line
// per cell (the cover is materialized first).
void write_small_cover(std::ostream& os, const SmallCover& m);
InstanceBundle read_bundle_file(const std::string& path);
DeltaComplex read_complex_file(const std::string& path);

// FNV-1a over the canonical serialization; used as the cache key.
std::string content_fingerprint(const DeltaComplex& x);

// Directory-backed cache of homology results keyed by content fingerprint.
class ResultCache {
  public:
    explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value) const;

  private:
    std::string dir_;
};

}  // namespace coverhom
