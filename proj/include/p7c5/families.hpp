#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "p7c5/graph.hpp"

namespace p7c5 {

enum class FamilyId { f1, f2, f3, f4, f5, f6, f7, f8, f9, f10, f11, f12 };

std::string family_name(FamilyId id);
FamilyId family_from_name(const std::string& name);

// F9 takes (t1, t2); F10 and F11 take t1; the rest are parameter-free and
// reject nonzero parameters.  Parameters are matched stable-set sizes and
// must be >= 1 where applicable.
struct FamilySpec {
    FamilyId id;
    int t1 = 0;
    int t2 = 0;

    bool operator==(const FamilySpec&) const = default;
    std::string to_string() const;
};

Graph generate_family(const FamilySpec& spec);

// Number of vertices of generate_family for the given spec.
int family_size(const FamilySpec& spec);

// A proper 3-coloring shipped with each family (parameterized stable sets
// are colored uniformly); generation asserts properness.
std::vector<int> family_reference_coloring(const FamilySpec& spec);

struct BlowupSpec {
    std::array<int, 7> sizes; // all >= 1
    bool clique = false;      // bags are cliques instead of stable sets
};

// Bags around a 7-cycle: bag i complete to bag i+1 (mod 7).  Vertices are
// laid out bag by bag.
Graph generate_blowup(const BlowupSpec& spec);

// g3 is the t-size clique blowup of the 7-cycle, g4 the complement of the
// 7-cycle; g1 and g2 are figure-only graphs whose adjacency is not shipped,
// so requesting them throws unsupported_error.
Graph generate_counterexample(const std::string& which, int t = 1);

// Recognition up to isomorphism against the generated candidates whose size
// fits.  classify_family returns the first match in (id, t1, t2) order;
// classify_family_all returns every matching spec, which matters because
// some of the twelve families coincide up to isomorphism.
std::optional<FamilySpec> classify_family(const Graph& g);
std::vector<FamilySpec> classify_family_all(const Graph& g);

} // namespace p7c5
