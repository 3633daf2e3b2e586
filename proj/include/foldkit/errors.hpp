#pragma once

#include <stdexcept>
#include <string>

namespace foldkit {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_matrix : error { using error::error; };
struct cap_exceeded : error { using error::error; };
struct unknown_generator : error { using error::error; };
struct empty_subset : error { using error::error; };
struct weight_mismatch : error { using error::error; };
struct invalid_weight : error { using error::error; };
struct unsupported_weights : error { using error::error; };
struct not_a_coxeter_embedding : error { using error::error; };
struct no_matching_case : error { using error::error; };
struct unknown_group_element : error { using error::error; };
struct kind_unavailable : error { using error::error; };
struct not_abelian : error { using error::error; };
struct inconsistent_action : error { using error::error; };
struct partition_mismatch : error { using error::error; };
struct verification_failed : error { using error::error; };
struct parse_error : error { using error::error; };

} // namespace foldkit
