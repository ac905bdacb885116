#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

class DbError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One deformation class of a smooth Fano threefold, keyed by
// (picard_rank, minus_k_cubed, h12, id).
struct FanoRecord {
  int picard_rank = 1;
  std::int64_t minus_k_cubed = 0;  // anticanonical degree, always even
  int h12 = 0;
  std::string id;           // short stable slug, unique within a key triple
  std::string description;  // source text for the variety
  std::string source;       // which classification table the row comes from

  bool operator==(const FanoRecord&) const = default;
};

class FanoDatabase {
 public:
  // The embedded seed records (kept byte-identical to data/fano_records.csv).
  static const FanoDatabase& seed();

  static FanoDatabase from_csv_text(const std::string& text);
  static FanoDatabase from_csv_file(const std::string& path);

  // Validates the record and rejects duplicates of (rank, degree, h12, id).
  void add(const FanoRecord& record);

  const std::vector<FanoRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  // All records with the exact invariant triple.
  std::vector<FanoRecord> lookup(int picard_rank, std::int64_t minus_k_cubed, int h12) const;
  std::vector<FanoRecord> by_rank(int picard_rank) const;

  // Round-trips through from_csv_text.
  std::string to_csv() const;

 private:
  std::vector<FanoRecord> records_;
};

// CSV header used by to_csv / from_csv_*.
extern const char kFanoCsvHeader[];

// A classification-table constraint on the invariants of a whole Picard rank:
// any enumerated candidate violating one of these cannot be a smooth Fano
// threefold.  `statement` is a functional summary, `source_text` quotes the
// underlying case-analysis literature verbatim.
struct RangeFact {
  std::string id;
  int picard_rank = 0;
  std::string statement;
  std::string source_text;
  std::function<bool(std::int64_t k3, int h12)> allows;
};

// All known range facts (every rank), in a fixed order.
const std::vector<RangeFact>& all_range_facts();

// The facts that apply to one Picard rank.
std::vector<RangeFact> range_facts(int picard_rank);

// First fact violated by (picard_rank, k3, h12), or nullptr.
const RangeFact* violated_range_fact(int picard_rank, std::int64_t k3, int h12);

}  // namespace fano
