#pragma once

// Catalog of printed presentations with their expected degrees and witnesses,
// read from catalog/expected.tsv. Entries whose presentation file is absent
// load as needs-external-presentation until a user supplies the file.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permdeg/bounds.hpp"
#include "permdeg/errors.hpp"
#include "permdeg/pcpres.hpp"
#include "permdeg/poly.hpp"
#include "permdeg/search.hpp"

namespace permdeg {

enum class WitnessKind { Subgroups, Characters, Type1, None };
enum class Claim { Exact, Upper };

// "Hgens/Kgens"; H is "G" for the whole group, "H" for the factor of a Type 1 row.
// K is taken together with the derived subgroup of H.
struct ClassSpec {
  std::vector<std::string> h;
  bool h_whole = false;
  std::vector<std::string> k;
};

struct CatalogEntry {
  std::string id;
  std::string file;     // relative to the catalog dir; empty when not printed
  std::string file_p5;  // replacement presentation at p = 5
  std::string validity_text;
  Expr validity;
  WitnessKind kind = WitnessKind::None;
  Claim claim = Claim::Exact;
  std::optional<PPoly> expected;
  std::vector<std::vector<std::string>> subgroups;
  std::vector<ClassSpec> classes;
  // Type 1: G = H × A with A a product of cyclic groups, one per generator.
  std::vector<std::string> factor;
  std::vector<std::string> complement;
  std::optional<PPoly> expected_factor;
};

class MissingPresentation : public InputError {
 public:
  using InputError::InputError;
};

struct Catalog {
  std::filesystem::path dir;
  std::vector<CatalogEntry> entries;

  // Throws InputError for an unknown id.
  const CatalogEntry& find(const std::string& id) const;
  // Presentation path used at p; empty if none is printed for that prime.
  std::filesystem::path presentation_path(const CatalogEntry& e, int p) const;
};

std::filesystem::path default_catalog_dir();
Catalog parse_catalog(const std::string& tsv, const std::filesystem::path& dir);
Catalog load_catalog(const std::filesystem::path& dir = default_catalog_dir());

bool prime_valid(const CatalogEntry& e, int p);

struct LoadedEntry {
  const CatalogEntry* entry = nullptr;
  Presentation pres;
  Bindings bindings;
  std::shared_ptr<PcGroup> group;
};

// Throws InputError if p is not prime or fails the entry's validity predicate,
// MissingPresentation if the presentation file is absent.
LoadedEntry load_entry(const Catalog& cat, const std::string& id, int p,
                       const std::map<std::string, std::string>& params = {});

enum class Status { Pass, Fail, NeedsExternal, NoWitness, InvalidPrime };
enum class ExactStatus { NotRun, Exact, Bounded };

const char* status_name(Status s);
const char* exact_status_name(ExactStatus s);

struct VerifyOptions {
  bool exact = false;
  SearchBudget budget;
  unsigned workers = 1;
};

struct EntryReport {
  std::string id;
  std::string params;  // "r=nu", empty without parameters
  int p = 0;
  Status status = Status::Pass;
  std::uint64_t expected = 0;
  std::uint64_t witness_degree = 0;
  std::vector<std::string> problems;
  ExactStatus exact = ExactStatus::NotRun;
  std::uint64_t computed = 0;  // exact value, or best bound when Bounded
  std::vector<BoundCheck> oracles;
};

// Witness check of one parameter choice, plus the exact search if requested.
EntryReport verify_entry(const LoadedEntry& le, int p, const VerifyOptions& opt = {});
// Loads and verifies; load failures become NeedsExternal / InvalidPrime reports.
EntryReport verify_entry(const Catalog& cat, const std::string& id, int p,
                         const std::map<std::string, std::string>& params, const VerifyOptions& opt = {});

struct Summary {
  std::vector<EntryReport> reports;
  std::map<Status, int> counts;
  bool ok() const;  // no Fail
};

// Every entry and every parameter choice at p, in catalog order.
Summary verify_all(const Catalog& cat, int p, const VerifyOptions& opt = {});
// The listed entries, each over all its parameter choices. Throws InputError for an unknown id.
Summary verify_ids(const Catalog& cat, const std::vector<std::string>& ids, int p, const VerifyOptions& opt = {});

// Reference list of μ values for the groups of order 3^6, keyed by μ.
std::map<std::uint64_t, std::vector<int>> load_order_3_6_reference(const std::filesystem::path& path);

}  // namespace permdeg
