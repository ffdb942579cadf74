#pragma once

#include <optional>
#include <vector>

#include "eolnash/circuit.hpp"

namespace eolnash {

enum class SolutionKind { EndOfLine, StartOfLine };

struct EolSolution {
    Word x;
    SolutionKind kind;
    bool operator==(const EolSolution& o) const { return x == o.x && kind == o.kind; }
    bool operator<(const EolSolution& o) const {
        return x.bits != o.x.bits ? x.bits < o.x.bits : kind < o.kind;
    }
};

// An EndOfTheLine instance: successor and predecessor circuits on n bits with
// P(0^n) = 0^n != S(0^n). Construction rejects anything else.
class EolInstance {
  public:
    EolInstance(int n, BitCircuit S, BitCircuit P);

    int n() const { return n_; }
    const BitCircuit& S() const { return S_; }
    const BitCircuit& P() const { return P_; }

    Word successor(const Word& x) const { return S_.evaluate(x); }
    Word predecessor(const Word& x) const { return P_.evaluate(x); }

    std::string serialize() const;
    static EolInstance parse(const std::string& text);
    static EolInstance parse_from(LineReader& in);
    void serialize_to(std::string& out) const;

  private:
    int n_;
    BitCircuit S_;
    BitCircuit P_;
};

// Solution predicate on the raw circuits: end-of-line when P(S(x)) != x,
// start-of-line when S(P(x)) != x and x != 0^n.
std::optional<EolSolution> is_solution(const EolInstance& inst, const Word& x);

// Wraps S with "if P(S(x)) != x then x else S(x)" and P symmetrically, as
// circuits. Afterwards every end is an S-fixed point and every start a
// P-fixed point; the solution set is unchanged.
EolInstance normalize(const EolInstance& inst);

// All solutions, sorted by numeric value of x. Refuses when 2^n > limit.
std::vector<EolSolution> solve_bruteforce(const EolInstance& inst, uint64_t limit = uint64_t(1) << 20);

// Builds an instance whose graph is exactly the given line (starting at 0^n)
// plus optional extra lines and cycles, with self-loops elsewhere.
// Table-lookup circuits; all sequences must be vertex-disjoint.
EolInstance gen_line_instance(int n, const std::vector<Word>& line);
EolInstance gen_multi_instance(int n, const std::vector<std::vector<Word>>& lines,
                               const std::vector<std::vector<Word>>& cycles = {});

} // namespace eolnash
