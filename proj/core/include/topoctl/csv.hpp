#pragma once

#include <string>
#include <vector>

namespace topoctl {

// %.12g, locale-independent; shared by every writer so reruns are
// byte-identical.
std::string format_double(double v);

// UTF-8 CSV with '#'-prefixed comment lines (schema version, seed, config
// echo) above a single header row.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& comments,
              const std::vector<std::string>& header);
    ~CsvWriter();

    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void row(const std::vector<double>& values);
    // mixed rows (e.g. integer run counts) are preformatted by the caller
    void row(const std::vector<std::string>& cells);
    void close();

private:
    void* f_ = nullptr;
    std::size_t columns_ = 0;
};

}  // namespace topoctl
