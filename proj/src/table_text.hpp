#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

// Internal helper: fixed-width text tables and CSV rows for the report
// renderers. Columns are left-aligned, two spaces apart.

namespace piq::detail {

struct TextTable {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;

    // byte length minus UTF-8 continuation bytes, so multi-byte headers
    // (the chi column labels) still line up
    static size_t display_width(const std::string& s) {
        size_t w = 0;
        for (unsigned char ch : s)
            if ((ch & 0xC0) != 0x80)
                ++w;
        return w;
    }

    std::string to_text() const {
        std::vector<size_t> width(headers.size());
        for (size_t c = 0; c < headers.size(); ++c)
            width[c] = display_width(headers[c]);
        for (const auto& row : rows)
            for (size_t c = 0; c < row.size() && c < width.size(); ++c)
                width[c] = std::max(width[c], display_width(row[c]));
        std::ostringstream out;
        auto emit = [&](const std::vector<std::string>& row) {
            for (size_t c = 0; c < row.size(); ++c) {
                if (c)
                    out << "  ";
                out << row[c];
                if (c + 1 < row.size())
                    out << std::string(width[c] - display_width(row[c]), ' ');
            }
            out << '\n';
        };
        emit(headers);
        for (const auto& row : rows)
            emit(row);
        return out.str();
    }

    std::string to_csv() const {
        std::ostringstream out;
        auto emit = [&](const std::vector<std::string>& row) {
            for (size_t c = 0; c < row.size(); ++c) {
                if (c)
                    out << ',';
                bool quote = row[c].find_first_of(",\"\n") != std::string::npos;
                if (!quote) {
                    out << row[c];
                    continue;
                }
                out << '"';
                for (char ch : row[c]) {
                    if (ch == '"')
                        out << '"';
                    out << ch;
                }
                out << '"';
            }
            out << '\n';
        };
        emit(headers);
        for (const auto& row : rows)
            emit(row);
        return out.str();
    }
};

}  // namespace piq::detail
