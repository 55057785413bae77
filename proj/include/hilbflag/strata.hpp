#pragma once

#include <string>
#include <vector>

#include "hilbflag/series.hpp"
#include "hilbflag/weights.hpp"
#include "hilbflag/young.hpp"

namespace hilbflag {

// Hilbert-Samuel type: t_i counts the boxes of a diagram on the i-th
// antidiagonal, equivalently the codimension of the degree-i piece of the
// ideal.  Stored with trailing zeros trimmed.
struct HSType {
    std::vector<int> t;

    HSType() = default;
    explicit HSType(std::vector<int> seq);

    int size() const;            // total box count
    int length() const { return static_cast<int>(t.size()); }
    int at(int i) const { return i >= 0 && i < length() ? t[i] : 0; }

    // First index whose entry drops below the staircase value i+1; entries
    // past it must be weakly decreasing for the type to be admissible.
    int initial_degree() const;

    std::string to_string() const;  // "(1,2,1)"

    friend auto operator<=>(const HSType&, const HSType&) = default;
};

std::ostream& operator<<(std::ostream& os, const HSType& T);

bool is_admissible(const HSType& T);

HSType type_of(const YoungDiagram& g);

// All admissible types of a given size, lexicographically sorted.
std::vector<HSType> enumerate_types(int n);

// The distinguished diagram of a type: every antidiagonal packed to the
// smallest x coordinates.
YoungDiagram normal_pattern_diagram(const HSType& T);

int dim_MT(const HSType& T);
int dim_GT(const HSType& T);

// A nested chain of types, one box added per step.
struct HSFlagType {
    std::vector<HSType> parts;

    std::string to_string() const;  // "(1,1) < (1,2)"

    friend auto operator<=>(const HSFlagType&, const HSFlagType&) = default;
};

std::ostream& operator<<(std::ostream& os, const HSFlagType& F);

bool is_admissible_flag(const HSFlagType& F);

HSFlagType flag_type_of(const Flag2& f);
HSFlagType flag_type_of(const Flag3& t);

// Admissible flag types whose first part has the given size.
std::vector<HSFlagType> enumerate_flag_types(int n, int depth);

// Stratum dimension read off at one fixed point through the mark counters;
// the same value must come out at every fixed point of the type.
int dim_pair_at(const Flag2& f, SpaceKind which);
int dim_triple_at(const Flag3& t, SpaceKind which);

struct StratumReport {
    HSType type;
    int dim_M = 0;
    int dim_G = 0;
    QPoly poincare_M;
    QPoly poincare_G;
    long long fixed_points = 0;
};

// One report per admissible type of size n; checks that realized and
// admissible types coincide.
std::vector<StratumReport> stratum_reports(int n);

struct FlagStratumReport {
    HSFlagType type;
    int dim_M = 0;
    int dim_G = 0;
    QPoly poincare_M;
    QPoly poincare_G;
    long long fixed_points = 0;
};

// Reports for depth 2 or 3 flags with base size n.  Dimension counters are
// evaluated at every fixed point of each type and must agree.
std::vector<FlagStratumReport> flag_stratum_reports(int n, int depth);

}  // namespace hilbflag
