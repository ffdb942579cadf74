#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eolnash/util.hpp"

namespace eolnash {

enum class GateKind : uint8_t { AND, OR, NOT, XOR, CONST0, CONST1, COPY };

const char* gate_kind_name(GateKind k);
int gate_arity(GateKind k);

// A reference into a circuit: either input j or the output of gate j.
struct Ref {
    bool is_gate = false;
    int index = 0;
    bool operator==(const Ref& o) const { return is_gate == o.is_gate && index == o.index; }
};

struct Gate {
    GateKind kind;
    Ref a, b; // b unused for unary/const kinds
};

// Gate-list boolean circuit, n input bits -> |outputs| output bits.
// Gates are stored in topological order: gate i may only reference inputs
// or gates < i. Immutable once built; evaluation is re-entrant.
class BitCircuit {
  public:
    BitCircuit(int num_inputs, std::vector<Gate> gates, std::vector<Ref> outputs);

    int num_inputs() const { return num_inputs_; }
    int num_outputs() const { return (int)outputs_.size(); }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<Ref>& outputs() const { return outputs_; }

    // Evaluates on a word of exactly num_inputs bits.
    Word evaluate(const Word& input) const;

    std::string serialize() const;
    static BitCircuit parse(const std::string& text);
    // Parses one embedded circuit block from a reader positioned at "circuit v1".
    static BitCircuit parse_from(LineReader& in);
    void serialize_to(std::string& out) const;

  private:
    int num_inputs_;
    std::vector<Gate> gates_;
    std::vector<Ref> outputs_;

    void check_ref(const Ref& r, int gate_limit, const char* what) const;
};

// Convenience builder for composing circuits gate by gate.
struct CircuitBuilder {
    int num_inputs;
    std::vector<Gate> gates;

    explicit CircuitBuilder(int n) : num_inputs(n) {}

    Ref input(int i) const { return Ref{false, i}; }
    Ref add(GateKind k, Ref a, Ref b = Ref{}) {
        gates.push_back(Gate{k, a, b});
        return Ref{true, (int)gates.size() - 1};
    }
    Ref const_bit(bool v) { return add(v ? GateKind::CONST1 : GateKind::CONST0, Ref{}); }
    // AND-reduction of a non-empty list.
    Ref and_all(const std::vector<Ref>& rs) {
        Ref acc = rs.at(0);
        for (size_t i = 1; i < rs.size(); ++i) acc = add(GateKind::AND, acc, rs[i]);
        return acc;
    }
    Ref or_all(const std::vector<Ref>& rs) {
        Ref acc = rs.at(0);
        for (size_t i = 1; i < rs.size(); ++i) acc = add(GateKind::OR, acc, rs[i]);
        return acc;
    }
    // Appends all gates of `c`, reading c's inputs from `args`. Returns c's output refs.
    std::vector<Ref> inline_circuit(const BitCircuit& c, const std::vector<Ref>& args);

    BitCircuit build(std::vector<Ref> outputs) {
        return BitCircuit(num_inputs, std::move(gates), std::move(outputs));
    }
};

} // namespace eolnash
