#include "eolnash/util.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace eolnash {

std::string fmt_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_number(const std::string& s, int line) {
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            double num = std::stod(s.substr(0, slash));
            double den = std::stod(s.substr(slash + 1));
            if (den == 0) throw parse_error("zero denominator in '" + s + "'", line);
            return num / den;
        }
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw parse_error("bad number '" + s + "'", line);
        return v;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad number '" + s + "'", line);
    } catch (const std::out_of_range&) {
        throw parse_error("number out of range '" + s + "'", line);
    }
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

LineReader::LineReader(const std::string& text) {
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) {
        if (!l.empty() && l.back() == '\r') l.pop_back();
        lines.push_back(l);
    }
}

const std::string* LineReader::next() {
    while (pos < lines.size()) {
        const std::string& l = lines[pos];
        ++pos;
        last_line = (int)pos;
        if (l.empty() || l[0] == '#') continue;
        return &lines[pos - 1];
    }
    return nullptr;
}

const std::string* LineReader::peek() {
    size_t save_pos = pos;
    int save_line = last_line;
    const std::string* l = next();
    pos = save_pos;
    last_line = save_line;
    return l;
}

void LineReader::expect(const std::string& want) {
    const std::string* l = next();
    if (!l || *l != want)
        throw parse_error("expected '" + want + "'" + (l ? ", got '" + *l + "'" : ", got end of input"),
                          last_line);
}

} // namespace eolnash
