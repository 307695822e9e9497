#pragma once

#include "homhopf/examples.hpp"
#include "homhopf/t_coalgebra.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Versioned JSON structure files.  Every tensor is a list of sparse entries
// [i_1, ..., i_k, o_1, ..., o_l, "p/q"]: input indices first, then output
// indices, then an exact coefficient.  Entries are written sorted by index
// tuple, zero coefficients are never written, and a LinMap f stores
// [j, i, c] for f(e_j) = ... + c e_i.
namespace homhopf::io {

using json = nlohmann::json;
namespace fs = std::filesystem;

inline constexpr int kFormatVersion = 1;

// hopf, algebra, automorphism, aut-pair, module, comodule, bicomodule-algebra,
// yd-module, linear-maps, t-coalgebra.
const std::vector<std::string>& kinds();

// Canonical text: keys sorted, two-space indentation, arrays of scalars on one
// line, trailing newline.  Equal documents give identical bytes.
std::string to_text(const json& doc);
json parse_text(const std::string& text);  // InputError on malformed JSON
json read_file(const fs::path& path);
void write_file(const fs::path& path, const json& doc);

// `carrier` is either an embedded hopf document or a path string; when null
// the carrier is embedded.
json to_json(const HomHopfAlgebra& h);
json to_json(const HomAlgebra& a, const std::vector<std::string>& basis = {});
json to_json(const HopfAutomorphism& f, const json& carrier = nullptr);
json to_json(const std::vector<AutPair>& pairs, const json& carrier = nullptr);
json to_json(const HomModule& m, const json& carrier = nullptr);
json to_json(const HomComodule& m, const json& carrier);  // carrier must be a hopf document or path
json to_json(const BicomoduleAlgebra& a, const json& carrier = nullptr);
json to_json(const YDModule& m, std::optional<int> grade = std::nullopt, const json& carrier = nullptr);
json to_json(const HopfTCoalgebra& t, const json& carrier = nullptr);
json linear_maps_json(const std::vector<std::pair<std::string, LinMap>>& maps);

json report_json(const AxiomReport& report);
json example_json(const ExampleSpec& spec);

struct RawAutPairs {
    HopfPtr carrier;
    std::vector<std::pair<LinMap, LinMap>> pairs;
};

// Turns documents back into structures.  Carriers are interned by content, so
// two files embedding (or referencing) the same Hopf algebra yield the same
// HopfPtr and can be combined.  Relative carrier paths resolve against `dir`.
// Every shape, index or coefficient problem throws InputError.
class Reader {
public:
    HopfPtr hopf(const json& doc, const fs::path& dir = {});
    AlgebraPtr algebra(const json& doc, const fs::path& dir = {});  // kind algebra or hopf
    HopfAutomorphism automorphism(const json& doc, const fs::path& dir = {});
    // Carrier and matrix without the automorphism check.
    std::pair<HopfPtr, LinMap> raw_automorphism(const json& doc, const fs::path& dir = {});
    RawAutPairs raw_aut_pairs(const json& doc, const fs::path& dir = {});
    std::vector<AutPair> aut_pairs(const json& doc, const fs::path& dir = {});
    HomModule module(const json& doc, const fs::path& dir = {});
    HomComodule comodule(const json& doc, const fs::path& dir = {});
    BicomoduleAlgebra bicomodule_algebra(const json& doc, const fs::path& dir = {});
    YDModule yd_module(const json& doc, const fs::path& dir = {});
    std::optional<int> grade(const json& doc);
    std::vector<std::pair<std::string, LinMap>> linear_maps(const json& doc);
    // Carrier and index set of a t-coalgebra file.
    std::pair<HopfPtr, std::vector<AutPair>> t_coalgebra_index(const json& doc, const fs::path& dir = {});

    HopfPtr carrier(const json& ref, const fs::path& dir);
    AlgebraPtr algebra_carrier(const json& ref, const fs::path& dir);

private:
    std::map<std::string, HopfPtr> hopfs_;
    std::map<std::string, AlgebraPtr> algebras_;
};

}  // namespace homhopf::io
