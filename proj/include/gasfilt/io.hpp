// CSV emission with lossless double formatting.
#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace gasfilt {

/// 17 significant digits round-trips every double exactly.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

class CsvWriter {
public:
    CsvWriter(std::ostream& out, std::vector<std::string> header) : out_(out) {
        for (std::size_t i = 0; i < header.size(); ++i)
            out_ << (i ? "," : "") << header[i];
        out_ << "\n";
    }

    void field(double x) { sep() << format_double(x); }
    void field(int x) { sep() << x; }
    void field(const std::string& s) { sep() << s; }
    void end_row() {
        out_ << "\n";
        first_ = true;
    }

private:
    std::ostream& sep() {
        if (!first_) out_ << ",";
        first_ = false;
        return out_;
    }
    std::ostream& out_;
    bool first_ = true;
};

} // namespace gasfilt
