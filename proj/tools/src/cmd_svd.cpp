#include <filesystem>
#include <iostream>
#include <stdexcept>

#include "commands.hpp"
#include "csv.hpp"
#include "matrix_market.hpp"
#include "parlin/svd/svd.hpp"

namespace parlin::cli {

namespace fs = std::filesystem;

void run_svd(const SvdArgs& args) {
  svd::SvdOptions options;
  if (args.path == "auto") {
    options.path = svd::SvdPath::kAuto;
  } else if (args.path == "gram") {
    options.path = svd::SvdPath::kGram;
  } else if (args.path == "lanczos") {
    options.path = svd::SvdPath::kLanczos;
  } else {
    throw std::invalid_argument("unknown path '" + args.path +
                                "', expected auto, gram, or lanczos");
  }
  options.lanczos.seed = args.seed;

  MatrixMarketData data = read_matrix_market(args.input);
  dist::RowMatrix a = to_row_matrix(data, args.partitions);

  svd::SvdResult result = svd::compute_svd(a, args.k, args.compute_u, options);

  fs::create_directories(args.out_dir);
  write_vector_csv((fs::path(args.out_dir) / "sigma.csv").string(), "sigma", result.sigma);
  write_matrix_csv((fs::path(args.out_dir) / "V.csv").string(), result.v);

  std::cout << "matrix: " << data.rows << "x" << data.cols << " (" << data.entries.size()
            << " entries)\n";
  std::cout << "path: "
            << (result.path_taken == svd::SvdPath::kGram ? "gram" : "lanczos") << "\n";
  std::cout << "requested k: " << result.requested_k << ", kept after truncation: "
            << result.sigma.size() << "\n";
  if (result.path_taken == svd::SvdPath::kLanczos) {
    std::cout << "restarts: " << result.restarts << ", matvecs: " << result.matvecs << "\n";
    std::cout << "residuals:";
    for (int i = 0; i < result.residuals.size(); ++i) {
      std::cout << " " << format_sig3(result.residuals[i]);
    }
    std::cout << "\n";
  }
  std::cout << "sigma:";
  for (int i = 0; i < result.sigma.size(); ++i) std::cout << " " << format_full(result.sigma[i]);
  std::cout << "\n";

  if (result.u.has_value()) {
    const auto rows = engine::collect(result.u->rows());
    local::DenseMatrix u(static_cast<int>(rows.size()), result.sigma.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i].for_each_stored([&](int j, double v) { u.at(static_cast<int>(i), j) = v; });
    }
    write_matrix_market_dense((fs::path(args.out_dir) / "U.mm").string(), u);
    std::cout << "U: " << u.num_rows() << "x" << u.num_cols() << " written\n";
  }
}

}  // namespace parlin::cli
