#include "eolnash/circuit.hpp"

#include <map>

namespace eolnash {

const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::AND: return "AND";
        case GateKind::OR: return "OR";
        case GateKind::NOT: return "NOT";
        case GateKind::XOR: return "XOR";
        case GateKind::CONST0: return "CONST0";
        case GateKind::CONST1: return "CONST1";
        case GateKind::COPY: return "COPY";
    }
    return "?";
}

int gate_arity(GateKind k) {
    switch (k) {
        case GateKind::AND:
        case GateKind::OR:
        case GateKind::XOR: return 2;
        case GateKind::NOT:
        case GateKind::COPY: return 1;
        case GateKind::CONST0:
        case GateKind::CONST1: return 0;
    }
    return 0;
}

static GateKind gate_kind_from(const std::string& s, int line) {
    static const std::map<std::string, GateKind> table = {
        {"AND", GateKind::AND},       {"OR", GateKind::OR},
        {"NOT", GateKind::NOT},       {"XOR", GateKind::XOR},
        {"CONST0", GateKind::CONST0}, {"CONST1", GateKind::CONST1},
        {"COPY", GateKind::COPY},
    };
    auto it = table.find(s);
    if (it == table.end()) throw parse_error("unknown gate kind '" + s + "'", line);
    return it->second;
}

void BitCircuit::check_ref(const Ref& r, int gate_limit, const char* what) const {
    if (r.is_gate) {
        if (r.index < 0 || r.index >= gate_limit)
            throw domain_error(std::string(what) + ": reference to gate " + std::to_string(r.index) +
                               " is not an earlier gate");
    } else {
        if (r.index < 0 || r.index >= num_inputs_)
            throw domain_error(std::string(what) + ": input reference out of range");
    }
}

BitCircuit::BitCircuit(int num_inputs, std::vector<Gate> gates, std::vector<Ref> outputs)
    : num_inputs_(num_inputs), gates_(std::move(gates)), outputs_(std::move(outputs)) {
    if (num_inputs_ < 0 || num_inputs_ > 63) throw domain_error("circuit input width out of range");
    for (size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        int ar = gate_arity(g.kind);
        if (ar >= 1) check_ref(g.a, (int)i, "gate operand");
        if (ar >= 2) check_ref(g.b, (int)i, "gate operand");
    }
    if (outputs_.empty()) throw domain_error("circuit has no outputs");
    if (outputs_.size() > 63) throw domain_error("circuit output width out of range");
    for (const Ref& r : outputs_) check_ref(r, (int)gates_.size(), "output");
}

Word BitCircuit::evaluate(const Word& input) const {
    if (input.width != num_inputs_)
        throw domain_error("circuit input width mismatch: got " + std::to_string(input.width) +
                           ", want " + std::to_string(num_inputs_));
    std::vector<char> val(gates_.size());
    auto read = [&](const Ref& r) -> bool {
        return r.is_gate ? val[r.index] != 0 : input.get(r.index);
    };
    for (size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        bool v = false;
        switch (g.kind) {
            case GateKind::AND: v = read(g.a) && read(g.b); break;
            case GateKind::OR: v = read(g.a) || read(g.b); break;
            case GateKind::XOR: v = read(g.a) != read(g.b); break;
            case GateKind::NOT: v = !read(g.a); break;
            case GateKind::COPY: v = read(g.a); break;
            case GateKind::CONST0: v = false; break;
            case GateKind::CONST1: v = true; break;
        }
        val[i] = v;
    }
    Word out(0, num_outputs());
    for (size_t i = 0; i < outputs_.size(); ++i)
        if (read(outputs_[i])) out.bits |= uint64_t(1) << i;
    return out;
}

static std::string ref_str(const Ref& r) {
    return (r.is_gate ? "g" : "i") + std::to_string(r.index);
}

static Ref ref_parse(const std::string& s, int line) {
    if (s.size() < 2 || (s[0] != 'i' && s[0] != 'g'))
        throw parse_error("bad reference '" + s + "'", line);
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw parse_error("bad reference '" + s + "'", line);
    return Ref{s[0] == 'g', std::stoi(s.substr(1))};
}

void BitCircuit::serialize_to(std::string& out) const {
    out += "circuit v1\n";
    out += "inputs " + std::to_string(num_inputs_) + "\n";
    for (size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        out += std::to_string(i);
        out += ' ';
        out += gate_kind_name(g.kind);
        int ar = gate_arity(g.kind);
        if (ar >= 1) { out += ' '; out += ref_str(g.a); }
        if (ar >= 2) { out += ' '; out += ref_str(g.b); }
        out += '\n';
    }
    out += "outputs";
    for (const Ref& r : outputs_) { out += ' '; out += ref_str(r); }
    out += '\n';
}

std::string BitCircuit::serialize() const {
    std::string out;
    serialize_to(out);
    return out;
}

BitCircuit BitCircuit::parse_from(LineReader& in) {
    in.expect("circuit v1");
    const std::string* l = in.next();
    if (!l) throw parse_error("expected 'inputs <n>', got end of input", in.last_line);
    auto toks = split_ws(*l);
    if (toks.size() != 2 || toks[0] != "inputs")
        throw parse_error("expected 'inputs <n>', got '" + *l + "'", in.last_line);
    int n = std::stoi(toks[1]);

    std::vector<Gate> gates;
    std::vector<Ref> outputs;
    while ((l = in.next())) {
        toks = split_ws(*l);
        if (toks.empty()) continue;
        if (toks[0] == "outputs") {
            for (size_t i = 1; i < toks.size(); ++i) outputs.push_back(ref_parse(toks[i], in.last_line));
            // Validation of forward references and ids happens in the constructor,
            // but report duplicates/forward refs with the line number here.
            try {
                return BitCircuit(n, std::move(gates), std::move(outputs));
            } catch (const domain_error& e) {
                throw parse_error(e.what(), in.last_line);
            }
        }
        // Gate line: <id> <KIND> <ref> [<ref>]
        if (toks.size() < 2) throw parse_error("bad gate line '" + *l + "'", in.last_line);
        int id;
        try {
            id = std::stoi(toks[0]);
        } catch (...) {
            throw parse_error("bad gate id '" + toks[0] + "'", in.last_line);
        }
        if (id != (int)gates.size()) {
            if (id < (int)gates.size())
                throw parse_error("duplicate gate id " + std::to_string(id), in.last_line);
            throw parse_error("gate ids must be consecutive: expected " +
                              std::to_string(gates.size()) + ", got " + std::to_string(id),
                              in.last_line);
        }
        GateKind kind = gate_kind_from(toks[1], in.last_line);
        int ar = gate_arity(kind);
        if ((int)toks.size() != 2 + ar)
            throw parse_error("gate " + std::string(gate_kind_name(kind)) + " takes " +
                              std::to_string(ar) + " operand(s)", in.last_line);
        Gate g{kind, Ref{}, Ref{}};
        if (ar >= 1) g.a = ref_parse(toks[2], in.last_line);
        if (ar >= 2) g.b = ref_parse(toks[3], in.last_line);
        // Forward references are rejected immediately so the error names this line.
        if (ar >= 1 && g.a.is_gate && g.a.index >= (int)gates.size())
            throw parse_error("reference to undefined gate g" + std::to_string(g.a.index), in.last_line);
        if (ar >= 2 && g.b.is_gate && g.b.index >= (int)gates.size())
            throw parse_error("reference to undefined gate g" + std::to_string(g.b.index), in.last_line);
        gates.push_back(g);
    }
    throw parse_error("circuit block missing 'outputs' line", in.last_line);
}

BitCircuit BitCircuit::parse(const std::string& text) {
    LineReader in(text);
    return parse_from(in);
}

std::vector<Ref> CircuitBuilder::inline_circuit(const BitCircuit& c, const std::vector<Ref>& args) {
    if ((int)args.size() != c.num_inputs())
        throw domain_error("inline_circuit: argument count mismatch");
    int base = (int)gates.size();
    auto remap = [&](const Ref& r) -> Ref {
        return r.is_gate ? Ref{true, r.index + base} : args[r.index];
    };
    for (const Gate& g : c.gates()) {
        Gate ng = g;
        int ar = gate_arity(g.kind);
        if (ar >= 1) ng.a = remap(g.a);
        if (ar >= 2) ng.b = remap(g.b);
        gates.push_back(ng);
    }
    std::vector<Ref> outs;
    outs.reserve(c.outputs().size());
    for (const Ref& r : c.outputs()) outs.push_back(remap(r));
    return outs;
}

} // namespace eolnash
