#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace zenocat::emit {

// Value formatted with 12 significant digits, '.' decimal separator.
std::string format_sig(double v, int sig = 12);

// A CSV table with mandatory header row; rows are emitted in insertion order,
// every float through format_sig, '\n' line endings.  The comment block (one
// '# ' line per entry) carries the resolved configuration.
class CsvTable {
public:
    CsvTable(std::vector<std::string> header, std::vector<std::string> comments = {});

    void add_row(const std::vector<std::string>& cells);
    std::vector<std::string> make_row(const std::vector<double>& vals) const;

    std::string to_string() const;
    void write_file(const std::string& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::string> comments_;
    std::vector<std::vector<std::string>> rows_;
};

// Minimal deterministic SVG line chart (one polyline per series).
struct Series {
    std::string label;
    std::vector<double> x, y;
};

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<Series>& series,
                           bool log_y = false);

std::string svg_bar_chart(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<double>& values);

void write_text_file(const std::string& path, const std::string& content);

// Deterministic parallel map: evaluates fn(i) for i in [0, n) on up to
// n_threads workers, results stored by index (output order never depends on
// scheduling).  n_threads <= 1 runs inline.
void parallel_for(std::size_t n, unsigned n_threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace zenocat::emit
