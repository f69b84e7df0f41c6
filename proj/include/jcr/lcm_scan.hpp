#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jcr/rational.hpp"

namespace jcr {

/// One sample of LCM(denom X(t), denom Y(t)) along t = n*d.
struct ScanRecord {
  std::uint64_t n = 0;
  Rational t;
  Integer lcm;  // 0 when skipped
  bool skipped = false;
};

/// t = n*d for n = 1..count on the unit-hyperbola parametrization, exact.
/// Records at t = +-1 are kept with skipped = true. Output does not depend
/// on `workers`.
std::vector<ScanRecord> scan_lcm(const Rational& d, std::uint64_t count, unsigned workers = 1);

/// "n,t,lcm,skipped" header plus one row per record.
std::string format_scan_csv(std::span<const ScanRecord> records);

struct HistogramBin {
  double lower_log10 = 0;
  std::uint64_t count = 0;
};

/// Nonempty bins of log10(lcm) with width `width`, ascending; skipped records
/// are excluded.
std::vector<HistogramBin> histogram(std::span<const ScanRecord> records, double width);

/// "bin_lower_log10,count" header plus one row per bin.
std::string format_histogram_csv(std::span<const HistogramBin> bins);

/// log10 of a positive integer; exact for powers of ten.
double log10_integer(const Integer& m);

}  // namespace jcr
