#pragma once

// Reference values of the published simulation tables for the whole, cc and em
// estimators. NaN marks a cell the published table does not report.

#include <limits>
#include <span>
#include <string_view>

namespace pomnar::sim {

struct PublishedCell {
  std::string_view table;
  int n;
  std::string_view parameter;
  std::string_view estimator;
  double mean, abs_bias, mse, cp, sd, mean_se;
};

namespace detail {
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
inline constexpr PublishedCell kPublished[] = {
    {"t2", 60, "theta1", "whole", 1.071, 0.071, 0.3552, 0.952, kNaN, kNaN},
    {"t2", 60, "theta1", "cc", 1.926, 0.926, 1.3276, 0.792, kNaN, kNaN},
    {"t2", 60, "theta1", "em", 1.275, 0.275, 0.6894, 0.881, kNaN, kNaN},
    {"t2", 60, "theta2", "whole", -0.663, 0.063, 0.3302, 0.951, kNaN, kNaN},
    {"t2", 60, "theta2", "cc", -0.279, 0.321, 0.5397, 0.927, kNaN, kNaN},
    {"t2", 60, "theta2", "em", -0.556, 0.044, 0.4808, 0.924, kNaN, kNaN},
    {"t2", 60, "x1", "whole", -1.095, 0.095, 0.459, 0.945, kNaN, kNaN},
    {"t2", 60, "x1", "cc", -1.49, 0.49, 0.8709, 0.931, kNaN, kNaN},
    {"t2", 60, "x1", "em", -1.216, 0.216, 0.6465, 0.931, kNaN, kNaN},
    {"t2", 60, "x3", "whole", 0.005, 0.0, 0.0002, 0.958, kNaN, kNaN},
    {"t2", 60, "x3", "cc", 0.017, 0.012, 0.0004, 0.914, kNaN, kNaN},
    {"t2", 60, "x3", "em", 0.01, 0.008, 0.0003, 0.937, kNaN, kNaN},
    {"t2", 60, "x4", "whole", -0.11, 0.01, 0.001, 0.951, kNaN, kNaN},
    {"t2", 60, "x4", "cc", -0.131, 0.031, 0.0023, 0.914, kNaN, kNaN},
    {"t2", 60, "x4", "em", -0.118, 0.018, 0.0016, 0.948, kNaN, kNaN},
    {"t2", 150, "theta1", "whole", 1.019, 0.019, 0.1183, 0.95, kNaN, kNaN},
    {"t2", 150, "theta1", "cc", 1.809, 0.809, 0.8126, 0.495, kNaN, kNaN},
    {"t2", 150, "theta1", "em", 1.098, 0.098, 0.1967, 0.934, kNaN, kNaN},
    {"t2", 150, "theta2", "whole", -0.615, 0.015, 0.1069, 0.954, kNaN, kNaN},
    {"t2", 150, "theta2", "cc", -0.24, 0.36, 0.2682, 0.838, kNaN, kNaN},
    {"t2", 150, "theta2", "em", -0.577, 0.023, 0.1254, 0.951, kNaN, kNaN},
    {"t2", 150, "x1", "whole", -1.033, 0.033, 0.1601, 0.949, kNaN, kNaN},
    {"t2", 150, "x1", "cc", -1.39, 0.39, 0.3557, 0.874, kNaN, kNaN},
    {"t2", 150, "x1", "em", -1.077, 0.077, 0.1869, 0.942, kNaN, kNaN},
    {"t2", 150, "x3", "whole", 0.005, 0.0, 0.0001, 0.949, kNaN, kNaN},
    {"t2", 150, "x3", "cc", 0.015, 0.01, 0.0002, 0.83, kNaN, kNaN},
    {"t2", 150, "x3", "em", 0.007, 0.002, 0.0001, 0.94, kNaN, kNaN},
    {"t2", 150, "x4", "whole", -0.103, 0.003, 0.0003, 0.956, kNaN, kNaN},
    {"t2", 150, "x4", "cc", -0.121, 0.021, 0.0008, 0.872, kNaN, kNaN},
    {"t2", 150, "x4", "em", -0.106, 0.006, 0.0004, 0.959, kNaN, kNaN},
    {"t2", 250, "theta1", "whole", 1.013, 0.013, 0.0669, 0.957, kNaN, kNaN},
    {"t2", 250, "theta1", "cc", 1.787, 0.787, 0.7069, 0.265, kNaN, kNaN},
    {"t2", 250, "theta1", "em", 1.045, 0.045, 0.0932, 0.946, kNaN, kNaN},
    {"t2", 250, "theta2", "whole", -0.618, 0.018, 0.063, 0.954, kNaN, kNaN},
    {"t2", 250, "theta2", "cc", -0.256, 0.344, 0.1985, 0.763, kNaN, kNaN},
    {"t2", 250, "theta2", "em", -0.606, 0.006, 0.0703, 0.947, kNaN, kNaN},
    {"t2", 250, "x1", "whole", -1.021, 0.021, 0.0844, 0.954, kNaN, kNaN},
    {"t2", 250, "x1", "cc", -1.369, 0.369, 0.245, 0.824, kNaN, kNaN},
    {"t2", 250, "x1", "em", -1.036, 0.036, 0.0938, 0.953, kNaN, kNaN},
    {"t2", 250, "x3", "whole", 0.005, 0.0, 0.0, 0.944, kNaN, kNaN},
    {"t2", 250, "x3", "cc", 0.015, 0.01, 0.0002, 0.739, kNaN, kNaN},
    {"t2", 250, "x3", "em", 0.006, 0.001, 0.0, 0.956, kNaN, kNaN},
    {"t2", 250, "x4", "whole", -0.103, 0.003, 0.0002, 0.939, kNaN, kNaN},
    {"t2", 250, "x4", "cc", -0.12, 0.02, 0.0006, 0.771, kNaN, kNaN},
    {"t2", 250, "x4", "em", -0.104, 0.004, 0.0002, 0.937, kNaN, kNaN},
    {"t2", 500, "theta1", "whole", 1.011, 0.011, 0.0354, 0.943, kNaN, kNaN},
    {"t2", 500, "theta1", "cc", 1.784, 0.784, 0.6621, 0.044, kNaN, kNaN},
    {"t2", 500, "theta1", "em", 1.031, 0.031, 0.0474, 0.945, kNaN, kNaN},
    {"t2", 500, "theta2", "whole", -0.605, 0.005, 0.0318, 0.942, kNaN, kNaN},
    {"t2", 500, "theta2", "cc", -0.242, 0.358, 0.1689, 0.544, kNaN, kNaN},
    {"t2", 500, "theta2", "em", -0.597, 0.003, 0.0329, 0.945, kNaN, kNaN},
    {"t2", 500, "x1", "whole", -1.01, 0.01, 0.0437, 0.944, kNaN, kNaN},
    {"t2", 500, "x1", "cc", -1.357, 0.357, 0.1818, 0.683, kNaN, kNaN},
    {"t2", 500, "x1", "em", -1.024, 0.024, 0.0492, 0.941, kNaN, kNaN},
    {"t2", 500, "x3", "whole", 0.005, 0.0, 0.0, 0.942, kNaN, kNaN},
    {"t2", 500, "x3", "cc", 0.015, 0.01, 0.0001, 0.49, kNaN, kNaN},
    {"t2", 500, "x3", "em", 0.006, 0.001, 0.0, 0.93, kNaN, kNaN},
    {"t2", 500, "x4", "whole", -0.101, 0.001, kNaN, 0.957, kNaN, kNaN},
    {"t2", 500, "x4", "cc", -0.118, 0.018, kNaN, 0.618, kNaN, kNaN},
    {"t2", 500, "x4", "em", -0.099, 0.002, kNaN, 0.958, kNaN, kNaN},
    {"t2", 1000, "theta1", "whole", 1.001, 0.001, 0.0161, 0.955, kNaN, kNaN},
    {"t2", 1000, "theta1", "cc", 1.764, 0.764, 0.6041, 0.0, kNaN, kNaN},
    {"t2", 1000, "theta1", "em", 1.007, 0.007, 0.0201, 0.956, kNaN, kNaN},
    {"t2", 1000, "theta2", "whole", -0.607, 0.007, 0.0155, 0.946, kNaN, kNaN},
    {"t2", 1000, "theta2", "cc", -0.247, 0.353, 0.1443, 0.283, kNaN, kNaN},
    {"t2", 1000, "theta2", "em", -0.604, 0.004, 0.0159, 0.948, kNaN, kNaN},
    {"t2", 1000, "x1", "whole", -1.001, 0.001, 0.0199, 0.949, kNaN, kNaN},
    {"t2", 1000, "x1", "cc", -1.342, 0.342, 0.1421, 0.452, kNaN, kNaN},
    {"t2", 1000, "x1", "em", -1.005, 0.005, 0.0218, 0.952, kNaN, kNaN},
    {"t2", 1000, "x3", "whole", 0.005, 0.0, 0.0, 0.947, kNaN, kNaN},
    {"t2", 1000, "x3", "cc", 0.015, 0.01, 0.0001, 0.225, kNaN, kNaN},
    {"t2", 1000, "x3", "em", 0.005, 0.0, 0.0, 0.955, kNaN, kNaN},
    {"t2", 1000, "x4", "whole", -0.1, 0.0, 0.0, 0.94, kNaN, kNaN},
    {"t2", 1000, "x4", "cc", -0.117, 0.017, 0.0003, 0.344, kNaN, kNaN},
    {"t2", 1000, "x4", "em", -0.101, 0.001, 0.0001, 0.934, kNaN, kNaN},
    {"t3", 60, "theta1", "whole", 1.071, 0.071, 0.3552, 0.952, kNaN, kNaN},
    {"t3", 60, "theta1", "cc", 2.973, 1.973, 5.1162, 0.451, kNaN, kNaN},
    {"t3", 60, "theta1", "em", 1.446, 0.446, 1.6538, 0.899, kNaN, kNaN},
    {"t3", 60, "theta2", "whole", -0.663, 0.82, 0.3302, 0.951, kNaN, kNaN},
    {"t3", 60, "theta2", "cc", -0.22, 1.133, 1.5607, 0.837, kNaN, kNaN},
    {"t3", 60, "theta2", "em", -0.472, 0.128, 0.8903, 0.928, kNaN, kNaN},
    {"t3", 60, "x1", "whole", -1.095, 0.095, 0.459, 0.945, kNaN, kNaN},
    {"t3", 60, "x1", "cc", -1.805, 0.805, 1.9163, 0.912, kNaN, kNaN},
    {"t3", 60, "x1", "em", -1.3, 0.3, 1.1524, 0.942, kNaN, kNaN},
    {"t3", 60, "x3", "whole", 0.005, 0.0, 0.0002, 0.958, kNaN, kNaN},
    {"t3", 60, "x3", "cc", 0.024, 0.019, 0.0009, 0.884, kNaN, kNaN},
    {"t3", 60, "x3", "em", 0.01, 0.005, 0.0004, 0.928, kNaN, kNaN},
    {"t3", 60, "x4", "whole", -0.11, 0.01, 0.001, 0.951, kNaN, kNaN},
    {"t3", 60, "x4", "cc", -0.147, 0.047, 0.0043, 0.895, kNaN, kNaN},
    {"t3", 60, "x4", "em", -0.124, 0.024, 0.0025, 0.934, kNaN, kNaN},
    {"t3", 150, "theta1", "whole", 1.019, 0.019, 0.1183, 0.95, kNaN, kNaN},
    {"t3", 150, "theta1", "cc", 2.702, 1.702, 3.1716, 0.06, kNaN, kNaN},
    {"t3", 150, "theta1", "em", 1.083, 0.083, 0.2753, 0.943, kNaN, kNaN},
    {"t3", 150, "theta2", "whole", -0.615, 0.015, 0.1069, 0.954, kNaN, kNaN},
    {"t3", 150, "theta2", "cc", -0.206, 0.806, 0.8648, 0.539, kNaN, kNaN},
    {"t3", 150, "theta2", "em", -0.578, 0.022, 0.1376, 0.955, kNaN, kNaN},
    {"t3", 150, "x1", "whole", -1.033, 0.033, 0.1601, 0.949, kNaN, kNaN},
    {"t3", 150, "x1", "cc", -1.619, 0.619, 0.6831, 0.815, kNaN, kNaN},
    {"t3", 150, "x1", "em", -1.072, 0.072, 0.2257, 0.946, kNaN, kNaN},
    {"t3", 150, "x3", "whole", 0.005, 0.0, 0.0001, 0.949, kNaN, kNaN},
    {"t3", 150, "x3", "cc", 0.022, 0.017, 0.0004, 0.692, kNaN, kNaN},
    {"t3", 150, "x3", "em", 0.006, 0.001, 0.0001, 0.95, kNaN, kNaN},
    {"t3", 150, "x4", "whole", -0.103, 0.003, 0.0003, 0.956, kNaN, kNaN},
    {"t3", 150, "x4", "cc", -0.132, 0.032, 0.0015, 0.766, kNaN, kNaN},
    {"t3", 150, "x4", "em", -0.106, 0.006, 0.0005, 0.964, kNaN, kNaN},
    {"t3", 250, "theta1", "whole", 1.013, 0.013, 0.0669, 0.957, kNaN, kNaN},
    {"t3", 250, "theta1", "cc", 2.669, 1.669, 2.9314, 0.003, kNaN, kNaN},
    {"t3", 250, "theta1", "em", 1.045, 0.045, 0.1332, 0.952, kNaN, kNaN},
    {"t3", 250, "theta2", "whole", -0.618, 0.018, 0.063, 0.954, kNaN, kNaN},
    {"t3", 250, "theta2", "cc", 0.187, 0.787, 0.7346, 0.335, kNaN, kNaN},
    {"t3", 250, "theta2", "em", -0.6, 0.0, 0.0731, 0.959, kNaN, kNaN},
    {"t3", 250, "x1", "whole", -1.021, 0.021, 0.0844, 0.954, kNaN, kNaN},
    {"t3", 250, "x1", "cc", -1.6, 0.6, 0.5102, 0.711, kNaN, kNaN},
    {"t3", 250, "x1", "em", -1.044, 0.044, 0.112, 0.956, kNaN, kNaN},
    {"t3", 250, "x3", "whole", 0.005, 0.0, 0.0, 0.944, kNaN, kNaN},
    {"t3", 250, "x3", "cc", 0.021, 0.016, 0.0003, 0.561, kNaN, kNaN},
    {"t3", 250, "x3", "em", 0.005, 0.0, 0.0001, 0.96, kNaN, kNaN},
    {"t3", 250, "x4", "whole", -0.103, 0.003, 0.0002, 0.939, kNaN, kNaN},
    {"t3", 250, "x4", "cc", -0.131, 0.031, 0.0012, 0.577, kNaN, kNaN},
    {"t3", 250, "x4", "em", -0.104, 0.004, 0.0003, 0.939, kNaN, kNaN},
    {"t3", 500, "theta1", "whole", 1.011, 0.011, 0.0354, 0.943, kNaN, kNaN},
    {"t3", 500, "theta1", "cc", 2.637, 1.637, 2.7559, 0.0, kNaN, kNaN},
    {"t3", 500, "theta1", "em", 1.04, 0.04, 0.0707, 0.943, kNaN, kNaN},
    {"t3", 500, "theta2", "whole", -0.605, 0.005, 0.0318, 0.942, kNaN, kNaN},
    {"t3", 500, "theta2", "cc", 0.195, 0.795, 0.6892, 0.064, kNaN, kNaN},
    {"t3", 500, "theta2", "em", -0.591, 0.009, 0.0379, 0.946, kNaN, kNaN},
    {"t3", 500, "x1", "whole", -1.01, 0.01, 0.0437, 0.944, kNaN, kNaN},
    {"t3", 500, "x1", "cc", -1.581, 0.581, 0.4149, 0.463, kNaN, kNaN},
    {"t3", 500, "x1", "em", -1.03, 0.03, 0.059, 0.94, kNaN, kNaN},
    {"t3", 500, "x3", "whole", 0.005, 0.0, 0.0, 0.942, kNaN, kNaN},
    {"t3", 500, "x3", "cc", 0.022, 0.017, 0.0003, 0.215, kNaN, kNaN},
    {"t3", 500, "x3", "em", 0.006, 0.001, 0.0, 0.935, kNaN, kNaN},
    {"t3", 500, "x4", "whole", -0.101, 0.001, 0.0001, 0.957, kNaN, kNaN},
    {"t3", 500, "x4", "cc", -0.128, 0.028, 0.0009, 0.316, kNaN, kNaN},
    {"t3", 500, "x4", "em", -0.102, 0.002, 0.0001, 0.959, kNaN, kNaN},
    {"t3", 1000, "theta1", "whole", 1.001, 0.001, 0.0161, 0.955, kNaN, kNaN},
    {"t3", 1000, "theta1", "cc", 2.609, 1.609, 2.6223, 0.0, kNaN, kNaN},
    {"t3", 1000, "theta1", "em", 1.006, 0.006, 0.0297, 0.944, kNaN, kNaN},
    {"t3", 1000, "theta2", "whole", -0.607, 0.007, 0.0155, 0.946, kNaN, kNaN},
    {"t3", 1000, "theta2", "cc", 0.182, 0.782, 0.6367, 0.0, kNaN, kNaN},
    {"t3", 1000, "theta2", "em", -0.603, 0.003, 0.0172, 0.949, kNaN, kNaN},
    {"t3", 1000, "x1", "whole", -1.001, 0.001, 0.0199, 0.949, kNaN, kNaN},
    {"t3", 1000, "x1", "cc", -1.554, 0.554, 0.3411, 0.163, kNaN, kNaN},
    {"t3", 1000, "x1", "em", -1.006, 0.006, 0.0253, 0.951, kNaN, kNaN},
    {"t3", 1000, "x3", "whole", 0.005, 0.0, 0.0, 0.947, kNaN, kNaN},
    {"t3", 1000, "x3", "cc", 0.021, 0.016, 0.0003, 0.041, kNaN, kNaN},
    {"t3", 1000, "x3", "em", 0.005, 0.0, 0.0, 0.946, kNaN, kNaN},
    {"t3", 1000, "x4", "whole", -0.1, 0.0, 0.0, 0.94, kNaN, kNaN},
    {"t3", 1000, "x4", "cc", -0.127, 0.027, 0.0008, 0.074, kNaN, kNaN},
    {"t3", 1000, "x4", "em", -0.101, 0.001, 0.0001, 0.935, kNaN, kNaN},
    {"t4", 60, "theta1", "whole", 1.071, 0.071, 0.3552, 0.952, kNaN, kNaN},
    {"t4", 60, "theta1", "cc", 5.598, 4.598, 33.3628, 0.326, kNaN, kNaN},
    {"t4", 60, "theta1", "em", 2.056, 1.056, 6.1152, 0.888, kNaN, kNaN},
    {"t4", 60, "theta2", "whole", -0.663, 0.063, 0.3302, 0.951, kNaN, kNaN},
    {"t4", 60, "theta2", "cc", 1.754, 2.354, 11.0449, 0.69, kNaN, kNaN},
    {"t4", 60, "theta2", "em", -0.171, 0.429, 2.7097, 0.906, kNaN, kNaN},
    {"t4", 60, "x1", "whole", -1.095, 0.095, 0.459, 0.945, kNaN, kNaN},
    {"t4", 60, "x1", "cc", -2.85, 1.85, 11.0145, 0.959, kNaN, kNaN},
    {"t4", 60, "x1", "em", -1.583, 0.583, 2.9001, 0.949, kNaN, kNaN},
    {"t4", 60, "x3", "whole", 0.005, 0.0, 0.0002, 0.958, kNaN, kNaN},
    {"t4", 60, "x3", "cc", 0.04, 0.034, 0.0035, 0.872, kNaN, kNaN},
    {"t4", 60, "x3", "em", 0.015, 0.01, 0.0011, 0.926, kNaN, kNaN},
    {"t4", 60, "x4", "whole", -0.11, 0.01, 0.001, 0.951, kNaN, kNaN},
    {"t4", 60, "x4", "cc", -0.181, 0.081, 0.018, 0.96, kNaN, kNaN},
    {"t4", 60, "x4", "em", -0.14, 0.04, 0.0068, 0.94, kNaN, kNaN},
    {"t4", 150, "theta1", "whole", 1.019, 0.019, 0.1183, 0.95, kNaN, kNaN},
    {"t4", 150, "theta1", "cc", 4.298, 3.298, 11.8009, 0.004, kNaN, kNaN},
    {"t4", 150, "theta1", "em", 1.162, 0.162, 0.9018, 0.888, kNaN, kNaN},
    {"t4", 150, "theta2", "whole", -0.615, 0.015, 0.1069, 0.954, kNaN, kNaN},
    {"t4", 150, "theta2", "cc", 1.214, 1.814, 3.8526, 0.151, kNaN, kNaN},
    {"t4", 150, "theta2", "em", -0.534, 0.066, 0.2995, 0.942, kNaN, kNaN},
    {"t4", 150, "x1", "whole", -1.033, 0.033, 0.1601, 0.949, kNaN, kNaN},
    {"t4", 150, "x1", "cc", -2.047, 1.047, 1.8011, 0.786, kNaN, kNaN},
    {"t4", 150, "x1", "em", -1.109, 0.109, 0.4155, 0.929, kNaN, kNaN},
    {"t4", 150, "x3", "whole", 0.005, 0.0, 0.0001, 0.958, kNaN, kNaN},
    {"t4", 150, "x3", "cc", 0.032, 0.027, 0.001, 0.872, kNaN, kNaN},
    {"t4", 150, "x3", "em", 0.007, 0.002, 0.0002, 0.926, kNaN, kNaN},
    {"t4", 150, "x4", "whole", -0.103, 0.003, 0.0003, 0.956, kNaN, kNaN},
    {"t4", 150, "x4", "cc", -0.146, 0.046, 0.0032, 0.753, kNaN, kNaN},
    {"t4", 150, "x4", "em", -0.109, 0.009, 0.0011, 0.938, kNaN, kNaN},
    {"t4", 250, "theta1", "whole", 1.013, 0.013, 0.0669, 0.957, kNaN, kNaN},
    {"t4", 250, "theta1", "cc", 4.177, 3.177, 10.5452, 0.0, kNaN, kNaN},
    {"t4", 250, "theta1", "em", 1.064, 0.064, 0.3269, 0.917, kNaN, kNaN},
    {"t4", 250, "theta2", "whole", -0.618, 0.018, 0.063, 0.954, kNaN, kNaN},
    {"t4", 250, "theta2", "cc", 1.135, 1.735, 3.2883, 0.035, kNaN, kNaN},
    {"t4", 250, "theta2", "em", -0.592, 0.008, 0.1273, 0.954, kNaN, kNaN},
    {"t4", 250, "x1", "whole", -1.021, 0.021, 0.0844, 0.954, kNaN, kNaN},
    {"t4", 250, "x1", "cc", -1.957, 0.957, 1.2779, 0.628, kNaN, kNaN},
    {"t4", 250, "x1", "em", -1.054, 0.054, 0.1862, 0.944, kNaN, kNaN},
    {"t4", 250, "x3", "whole", 0.005, 0.0, 0.0, 0.944, kNaN, kNaN},
    {"t4", 250, "x3", "cc", 0.03, 0.025, 0.0008, 0.448, kNaN, kNaN},
    {"t4", 250, "x3", "em", 0.005, 0.0, 0.0001, 0.948, kNaN, kNaN},
    {"t4", 250, "x4", "whole", -0.103, 0.003, 0.0002, 0.939, kNaN, kNaN},
    {"t4", 250, "x4", "cc", -0.142, 0.042, 0.0023, 0.527, kNaN, kNaN},
    {"t4", 250, "x4", "em", -0.105, 0.005, 0.0004, 0.93, kNaN, kNaN},
    {"t4", 500, "theta1", "whole", 1.011, 0.011, 0.0354, 0.943, kNaN, kNaN},
    {"t4", 500, "theta1", "cc", 4.095, 3.095, 9.7817, 0.0, kNaN, kNaN},
    {"t4", 500, "theta1", "em", 1.072, 0.072, 0.1684, 0.93, kNaN, kNaN},
    {"t4", 500, "theta2", "whole", -0.605, 0.005, 0.0318, 0.942, kNaN, kNaN},
    {"t4", 500, "theta2", "cc", 1.118, 1.718, 3.0653, 0.0, kNaN, kNaN},
    {"t4", 500, "theta2", "em", -0.577, 0.023, 0.0596, 0.939, kNaN, kNaN},
    {"t4", 500, "x1", "whole", -1.01, 0.01, 0.0437, 0.944, kNaN, kNaN},
    {"t4", 500, "x1", "cc", -1.921, 0.921, 1.0064, 0.324, kNaN, kNaN},
    {"t4", 500, "x1", "em", -1.048, 0.048, 0.0917, 0.939, kNaN, kNaN},
    {"t4", 500, "x3", "whole", 0.005, 0.0, 0.0, 0.944, kNaN, kNaN},
    {"t4", 500, "x3", "cc", 0.03, 0.025, 0.0007, 0.324, kNaN, kNaN},
    {"t4", 500, "x3", "em", 0.006, 0.001, 0.0, 0.939, kNaN, kNaN},
    {"t4", 500, "x4", "whole", -0.101, 0.001, 0.0001, 0.957, kNaN, kNaN},
    {"t4", 500, "x4", "cc", -0.139, 0.039, 0.0018, 0.221, kNaN, kNaN},
    {"t4", 500, "x4", "em", -0.103, 0.003, 0.0002, 0.942, kNaN, kNaN},
    {"t4", 1000, "theta1", "whole", 1.0, 0.0, 0.0162, 0.957, kNaN, kNaN},
    {"t4", 1000, "theta1", "cc", 3.989, 2.989, 9.0196, 0.0, kNaN, kNaN},
    {"t4", 1000, "theta1", "em", 0.999, 0.001, 0.0685, 0.932, kNaN, kNaN},
    {"t4", 1000, "theta2", "whole", -0.608, 0.008, 0.0151, 0.954, kNaN, kNaN},
    {"t4", 1000, "theta2", "cc", 1.082, 1.682, 2.8807, 0.0, kNaN, kNaN},
    {"t4", 1000, "theta2", "em", -0.605, 0.005, 0.0255, 0.948, kNaN, kNaN},
    {"t4", 1000, "x1", "whole", -0.999, 0.001, 0.0206, 0.948, kNaN, kNaN},
    {"t4", 1000, "x1", "cc", -1.85, 0.85, 0.7945, 0.096, kNaN, kNaN},
    {"t4", 1000, "x1", "em", -1.001, 0.001, 0.0391, 0.957, kNaN, kNaN},
    {"t4", 1000, "x3", "whole", 0.005, 0.0, 0.0, 0.953, kNaN, kNaN},
    {"t4", 1000, "x3", "cc", 0.029, 0.024, 0.0006, 0.015, kNaN, kNaN},
    {"t4", 1000, "x3", "em", 0.005, 0.0, 0.0, 0.96, kNaN, kNaN},
    {"t4", 1000, "x4", "whole", -0.1, 0.0, 0.0, 0.946, kNaN, kNaN},
    {"t4", 1000, "x4", "cc", -0.136, 0.036, 0.0014, 0.032, kNaN, kNaN},
    {"t4", 1000, "x4", "em", -0.101, 0.001, 0.0001, 0.938, kNaN, kNaN},
    {"alt", 250, "theta1", "whole", 1.022, 0.022, 0.08, 0.91, kNaN, kNaN},
    {"alt", 250, "theta1", "cc", 3.862, 2.862, 11.1198, 0.238, kNaN, kNaN},
    {"alt", 250, "theta1", "em", 1.57, 0.57, 2.3764, 0.94, kNaN, kNaN},
    {"alt", 250, "theta2", "whole", -0.607, 0.007, 0.073, 0.94, kNaN, kNaN},
    {"alt", 250, "theta2", "cc", 1.773, 2.373, 8.6316, 0.048, kNaN, kNaN},
    {"alt", 250, "theta2", "em", -0.285, 0.315, 1.078, 0.92, kNaN, kNaN},
    {"alt", 250, "x1", "whole", 0.498, 0.002, 0.0967, 0.94, kNaN, kNaN},
    {"alt", 250, "x1", "cc", 0.628, 0.128, 3.6833, 0.952, kNaN, kNaN},
    {"alt", 250, "x1", "em", 0.549, 0.049, 0.2277, 0.952, kNaN, kNaN},
    {"alt", 250, "x3", "whole", -0.052, 0.002, 0.0001, 0.97, kNaN, kNaN},
    {"alt", 250, "x3", "cc", -0.022, 0.028, 0.0018, 0.762, kNaN, kNaN},
    {"alt", 250, "x3", "em", -0.055, 0.005, 0.0009, 0.96, kNaN, kNaN},
    {"alt", 250, "x4", "whole", 0.101, 0.001, 0.0001, 0.95, kNaN, kNaN},
    {"alt", 250, "x4", "cc", 0.049, 0.051, 0.0039, 0.429, kNaN, kNaN},
    {"alt", 250, "x4", "em", 0.112, 0.012, 0.0016, 0.98, kNaN, kNaN},
    {"supp5", 60, "theta1", "whole", 0.658, 0.058, 0.2442, 0.9395, 0.4907, 0.463},
    {"supp5", 60, "theta1", "cc", 1.724, 1.124, 1.7381, 0.5937, 0.6885, 0.6468},
    {"supp5", 60, "theta1", "em", 1.304, 0.704, 1.2219, 0.7537, 0.852, 0.7343},
    {"supp5", 60, "theta2", "whole", 0.512, 0.012, 0.2337, 0.9476, 0.4833, 0.4596},
    {"supp5", 60, "theta2", "cc", 1.535, 1.035, 1.5294, 0.6435, 0.6771, 0.6359},
    {"supp5", 60, "theta2", "em", 1.143, 0.643, 1.1247, 0.7671, 0.8434, 0.7241},
    {"supp5", 60, "theta3", "whole", -0.216, 0.016, 0.2228, 0.953, 0.4718, 0.4534},
    {"supp5", 60, "theta3", "cc", 0.633, 0.833, 1.1047, 0.7115, 0.6407, 0.5927},
    {"supp5", 60, "theta3", "em", 0.381, 0.582, 1.0045, 0.7704, 0.8166, 0.6834},
    {"supp5", 60, "theta4", "whole", -0.76, 0.06, 0.2375, 0.9476, 0.4837, 0.4683},
    {"supp5", 60, "theta4", "cc", -0.022, 0.678, 0.869, 0.7825, 0.6396, 0.5837},
    {"supp5", 60, "theta4", "em", -0.185, 0.515, 0.9555, 0.7787, 0.8308, 0.6766},
    {"supp5", 60, "x1", "whole", -1.394, 0.094, 0.3619, 0.9476, 0.5942, 0.5669},
    {"supp5", 60, "x1", "cc", -2.034, 0.734, 1.1417, 0.8459, 0.7764, 0.7222},
    {"supp5", 60, "x1", "em", -1.691, 0.391, 0.7509, 0.9301, 0.7733, 0.7513},
    {"supp5", 60, "x3", "whole", 0.009, 0.001, 0.0002, 0.957, 0.0139, 0.0135},
    {"supp5", 60, "x3", "cc", 0.01, 0.002, 0.0003, 0.9532, 0.0167, 0.0154},
    {"supp5", 60, "x3", "em", 0.01, 0.002, 0.0003, 0.9551, 0.0161, 0.0148},
    {"supp5", 60, "x4", "whole", -0.023, 0.003, 0.0003, 0.9664, 0.0183, 0.0174},
    {"supp5", 60, "x4", "cc", -0.024, 0.004, 0.0005, 0.9562, 0.0209, 0.0197},
    {"supp5", 60, "x4", "em", -0.023, 0.003, 0.0004, 0.9418, 0.0206, 0.0189},
    {"supp5", 150, "theta1", "whole", 0.602, 0.002, 0.0839, 0.9593, 0.2896, 0.283},
    {"supp5", 150, "theta1", "cc", 1.571, 0.971, 1.0701, 0.2287, 0.3561, 0.3698},
    {"supp5", 150, "theta1", "em", 0.972, 0.372, 0.5121, 0.7837, 0.6111, 0.483},
    {"supp5", 150, "theta2", "whole", 0.498, 0.002, 0.0827, 0.9614, 0.2875, 0.2815},
    {"supp5", 150, "theta2", "cc", 1.45, 0.95, 1.0241, 0.2352, 0.3493, 0.3654},
    {"supp5", 150, "theta2", "em", 0.867, 0.367, 0.4969, 0.7872, 0.6016, 0.4758},
    {"supp5", 150, "theta3", "whole", -0.218, 0.018, 0.0801, 0.9531, 0.2825, 0.2782},
    {"supp5", 150, "theta3", "cc", 0.577, 0.777, 0.7177, 0.3654, 0.3376, 0.3398},
    {"supp5", 150, "theta3", "em", 0.131, 0.331, 0.438, 0.7953, 0.5731, 0.4323},
    {"supp5", 150, "theta4", "whole", -0.737, 0.037, 0.0872, 0.9489, 0.293, 0.2875},
    {"supp5", 150, "theta4", "cc", -0.038, 0.662, 0.5529, 0.4912, 0.3389, 0.3359},
    {"supp5", 150, "theta4", "em", -0.41, 0.29, 0.3975, 0.8209, 0.5596, 0.4223},
    {"supp5", 150, "x1", "whole", -1.325, 0.025, 0.1233, 0.9489, 0.3503, 0.3467},
    {"supp5", 150, "x1", "cc", -1.897, 0.597, 0.5262, 0.7298, 0.4122, 0.4161},
    {"supp5", 150, "x1", "em", -1.497, 0.197, 0.2361, 0.936, 0.444, 0.4551},
    {"supp5", 150, "x3", "whole", 0.009, 0.001, 0.0001, 0.9468, 0.0085, 0.0081},
    {"supp5", 150, "x3", "cc", 0.01, 0.002, 0.0001, 0.9387, 0.0097, 0.0092},
    {"supp5", 150, "x3", "em", 0.009, 0.001, 0.0001, 0.9535, 0.0092, 0.0088},
    {"supp5", 150, "x4", "whole", -0.021, 0.001, 0.0001, 0.9531, 0.0107, 0.0103},
    {"supp5", 150, "x4", "cc", -0.022, 0.002, 0.0002, 0.9464, 0.0123, 0.0115},
    {"supp5", 150, "x4", "em", -0.021, 0.001, 0.0001, 0.9384, 0.0121, 0.0112},
    {"supp5", 250, "theta1", "whole", 0.608, 0.008, 0.0475, 0.9467, 0.2177, 0.2165},
    {"supp5", 250, "theta1", "cc", 1.549, 0.949, 0.9685, 0.0481, 0.2591, 0.2808},
    {"supp5", 250, "theta1", "em", 0.847, 0.247, 0.3116, 0.8562, 0.5005, 0.3977},
    {"supp5", 250, "theta2", "whole", 0.509, 0.009, 0.0474, 0.9417, 0.2175, 0.2154},
    {"supp5", 250, "theta2", "cc", 1.438, 0.938, 0.9469, 0.042, 0.2574, 0.2777},
    {"supp5", 250, "theta2", "em", 0.75, 0.25, 0.3072, 0.8617, 0.4945, 0.3906},
    {"supp5", 250, "theta3", "whole", -0.201, 0.001, 0.0442, 0.9558, 0.2103, 0.2125},
    {"supp5", 250, "theta3", "cc", 0.573, 0.773, 0.6579, 0.1167, 0.2446, 0.2579},
    {"supp5", 250, "theta3", "em", 0.019, 0.219, 0.2475, 0.8761, 0.4468, 0.3442},
    {"supp5", 250, "theta4", "whole", -0.708, 0.008, 0.0473, 0.9558, 0.2174, 0.2192},
    {"supp5", 250, "theta4", "cc", -0.024, 0.676, 0.5164, 0.2252, 0.2423, 0.2549},
    {"supp5", 250, "theta4", "em", -0.502, 0.198, 0.2299, 0.8894, 0.4368, 0.3305},
    {"supp5", 250, "x1", "whole", -1.317, 0.017, 0.0724, 0.9477, 0.2685, 0.2655},
    {"supp5", 250, "x1", "cc", -1.863, 0.563, 0.4106, 0.5752, 0.3053, 0.3165},
    {"supp5", 250, "x1", "em", -1.444, 0.144, 0.1457, 0.9369, 0.3533, 0.3615},
    {"supp5", 250, "x3", "whole", 0.008, 0.0, 0.0, 0.9528, 0.0062, 0.0062},
    {"supp5", 250, "x3", "cc", 0.01, 0.002, 0.0001, 0.9427, 0.007, 0.007},
    {"supp5", 250, "x3", "em", 0.008, 0.0, 0.0, 0.9502, 0.0067, 0.0067},
    {"supp5", 250, "x4", "whole", -0.021, 0.001, 0.0001, 0.9467, 0.008, 0.0078},
    {"supp5", 250, "x4", "cc", -0.022, 0.002, 0.0001, 0.9478, 0.0091, 0.0087},
    {"supp5", 250, "x4", "em", -0.021, 0.001, 0.0001, 0.9403, 0.0089, 0.0085},
    {"supp5", 500, "theta1", "whole", 0.606, 0.006, 0.025, 0.946, 0.1581, 0.1526},
    {"supp5", 500, "theta1", "cc", 1.529, 0.929, 0.8972, 0.002, 0.1846, 0.1968},
    {"supp5", 500, "theta1", "em", 0.708, 0.108, 0.1261, 0.9293, 0.3383, 0.2954},
    {"supp5", 500, "theta2", "whole", 0.505, 0.005, 0.0244, 0.948, 0.1562, 0.1518},
    {"supp5", 500, "theta2", "cc", 1.417, 0.917, 0.8735, 0.002, 0.1814, 0.1946},
    {"supp5", 500, "theta2", "em", 0.609, 0.109, 0.1209, 0.9358, 0.3301, 0.2876},
    {"supp5", 500, "theta3", "whole", -0.2, 0.0, 0.0227, 0.947, 0.1508, 0.1498},
    {"supp5", 500, "theta3", "cc", 0.561, 0.761, 0.6077, 0.005, 0.1682, 0.1808},
    {"supp5", 500, "theta3", "em", -0.107, 0.093, 0.0922, 0.9456, 0.2889, 0.2418},
    {"supp5", 500, "theta4", "whole", -0.706, 0.006, 0.0244, 0.946, 0.1559, 0.1546},
    {"supp5", 500, "theta4", "cc", -0.033, 0.667, 0.4738, 0.031, 0.1706, 0.1789},
    {"supp5", 500, "theta4", "em", -0.622, 0.078, 0.0795, 0.9499, 0.2707, 0.2276},
    {"supp5", 500, "x1", "whole", -1.311, 0.011, 0.0375, 0.952, 0.1933, 0.1869},
    {"supp5", 500, "x1", "cc", -1.844, 0.544, 0.3435, 0.3073, 0.2175, 0.2217},
    {"supp5", 500, "x1", "em", -1.376, 0.076, 0.0759, 0.9423, 0.2646, 0.2625},
    {"supp5", 500, "x3", "whole", 0.008, 0.0, 0.0, 0.94, 0.0044, 0.0043},
    {"supp5", 500, "x3", "cc", 0.009, 0.001, 0.0, 0.9359, 0.005, 0.0049},
    {"supp5", 500, "x3", "em", 0.008, 0.0, 0.0, 0.9412, 0.0048, 0.0046},
    {"supp5", 500, "x4", "whole", -0.02, 0.0, 0.0, 0.949, 0.0056, 0.0055},
    {"supp5", 500, "x4", "cc", -0.021, 0.001, 0.0, 0.9489, 0.0062, 0.006},
    {"supp5", 500, "x4", "em", -0.02, 0.0, 0.0, 0.9467, 0.0059, 0.0058},
    {"supp5", 1000, "theta1", "whole", 0.6, 0.0, 0.012, 0.951, 0.1079, 0.1076},
    {"supp5", 1000, "theta1", "cc", 1.523, 0.923, 0.868, 0.0, 0.1288, 0.1387},
    {"supp5", 1000, "theta1", "em", 0.657, 0.057, 0.049, 0.9515, 0.2129, 0.2085},
    {"supp5", 1000, "theta2", "whole", 0.5, 0.0, 0.011, 0.949, 0.1072, 0.107},
    {"supp5", 1000, "theta2", "cc", 1.411, 0.911, 0.846, 0.0, 0.1274, 0.1371},
    {"supp5", 1000, "theta2", "em", 0.557, 0.057, 0.046, 0.9578, 0.2068, 0.2018},
    {"supp5", 1000, "theta3", "whole", -0.202, 0.002, 0.011, 0.944, 0.107, 0.1056},
    {"supp5", 1000, "theta3", "cc", 0.558, 0.758, 0.59, 0.0, 0.1224, 0.1274},
    {"supp5", 1000, "theta3", "em", -0.154, 0.046, 0.032, 0.9599, 0.1715, 0.1642},
    {"supp5", 1000, "theta4", "whole", -0.705, 0.005, 0.012, 0.952, 0.1108, 0.109},
    {"supp5", 1000, "theta4", "cc", -0.032, 0.668, 0.461, 0.0, 0.1234, 0.1261},
    {"supp5", 1000, "theta4", "em", -0.663, 0.037, 0.027, 0.9652, 0.161, 0.153},
    {"supp5", 1000, "x1", "whole", -1.306, 0.006, 0.017, 0.946, 0.1312, 0.1318},
    {"supp5", 1000, "x1", "cc", -1.836, 0.536, 0.311, 0.051, 0.1521, 0.1562},
    {"supp5", 1000, "x1", "em", -1.346, 0.046, 0.035, 0.9536, 0.1804, 0.1857},
    {"supp5", 1000, "x3", "whole", 0.008, 0.0, 0.0, 0.949, 0.0031, 0.0031},
    {"supp5", 1000, "x3", "cc", 0.01, 0.002, 0.0, 0.927, 0.0034, 0.0034},
    {"supp5", 1000, "x3", "em", 0.008, 0.0, 0.0, 0.9462, 0.0032, 0.0032},
    {"supp5", 1000, "x4", "whole", -0.02, 0.0, 0.0, 0.961, 0.0037, 0.0038},
    {"supp5", 1000, "x4", "cc", -0.021, 0.001, 0.0, 0.965, 0.0041, 0.0042},
    {"supp5", 1000, "x4", "em", -0.02, 0.0, 0.0, 0.9599, 0.0039, 0.004},
};
}  // namespace detail

inline std::span<const PublishedCell> published_cells() { return detail::kPublished; }

inline const PublishedCell* find_published(std::string_view table, int n, std::string_view parameter,
                                           std::string_view estimator) {
  for (const auto& c : detail::kPublished)
    if (c.table == table && c.n == n && c.parameter == parameter && c.estimator == estimator) return &c;
  return nullptr;
}

}  // namespace pomnar::sim
