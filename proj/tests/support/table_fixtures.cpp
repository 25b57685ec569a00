#include "support/table_fixtures.hpp"

namespace testsupport {

const std::vector<TableRow>& benchmark_rows() {
    static const std::vector<TableRow> rows = {
        // gamescreen, provided
        {"t1", "Human", 171, 85, 0, 0, 1.00, 1.00, 1.00, 1.00},
        {"t1", "Mixtral-8x7B-Instruct-v0.1", 124, 47, 38, 47, 0.74, 0.67, 0.77, 0.73},
        {"t1", "gemma-1.1-7b-it", 105, 75, 10, 66, 0.73, 0.70, 0.91, 0.61},
        {"t1", "Meta-Llama-3-70B-Instruct", 85, 82, 3, 86, 0.66, 0.65, 0.97, 0.50},
        {"t1", "Meta-Llama-3-8B-Instruct", 83, 81, 4, 88, 0.64, 0.64, 0.95, 0.49},
        {"t1", "c4ai-command-r-v01", 83, 64, 21, 88, 0.60, 0.57, 0.80, 0.49},
        {"t1", "Mistral-7B-Instruct-v0.2", 55, 83, 2, 116, 0.48, 0.54, 0.96, 0.32},
        {"t1", "gemma-1.1-2b-it", 0, 85, 0, 171, 0.00, 0.33, 0.00, 0.00},
        // cropped, provided
        {"t2", "Human", 171, 85, 0, 0, 1.00, 1.00, 1.00, 1.00},
        {"t2", "Mixtral-8x7B-Instruct-v0.1", 132, 48, 37, 39, 0.78, 0.70, 0.78, 0.77},
        {"t2", "gemma-1.1-7b-it", 124, 52, 33, 47, 0.76, 0.69, 0.79, 0.73},
        {"t2", "gemma-1.1-2b-it", 131, 43, 42, 40, 0.76, 0.68, 0.76, 0.77},
        {"t2", "c4ai-command-r-v01", 120, 57, 28, 51, 0.75, 0.69, 0.81, 0.70},
        {"t2", "Meta-Llama-3-70B-Instruct", 92, 56, 29, 79, 0.63, 0.58, 0.76, 0.54},
        {"t2", "Meta-Llama-3-8B-Instruct", 79, 78, 7, 92, 0.61, 0.61, 0.92, 0.46},
        {"t2", "Mistral-7B-Instruct-v0.2", 77, 82, 3, 94, 0.61, 0.62, 0.96, 0.45},
        // gamescreen, discovered
        {"t3", "Human", 171, 85, 0, 0, 1.00, 1.00, 1.00, 1.00},
        {"t3", "Meta-Llama-3-70B-Instruct", 165, 19, 66, 6, 0.82, 0.72, 0.71, 0.96},
        {"t3", "Meta-Llama-3-8B-Instruct", 153, 26, 59, 18, 0.80, 0.70, 0.72, 0.89},
        {"t3", "gemma-1.1-7b-it", 145, 25, 60, 26, 0.77, 0.66, 0.71, 0.85},
        {"t3", "Mixtral-8x7B-Instruct-v0.1", 130, 33, 52, 41, 0.74, 0.64, 0.71, 0.76},
        {"t3", "Mistral-7B-Instruct-v0.2", 90, 32, 53, 81, 0.57, 0.48, 0.63, 0.53},
        {"t3", "c4ai-command-r-v01", 80, 52, 33, 91, 0.56, 0.52, 0.71, 0.47},
        {"t3", "gemma-1.1-2b-it", 0, 85, 0, 171, 0.00, 0.33, 0.00, 0.00},
        // cropped, discovered
        {"t4", "Human", 171, 85, 0, 0, 1.00, 1.00, 1.00, 1.00},
        {"t4", "Meta-Llama-3-70B-Instruct", 159, 33, 52, 12, 0.83, 0.75, 0.75, 0.93},
        {"t4", "gemma-1.1-7b-it", 163, 17, 68, 8, 0.81, 0.70, 0.71, 0.95},
        {"t4", "Mixtral-8x7B-Instruct-v0.1", 127, 32, 53, 44, 0.72, 0.62, 0.71, 0.74},
        {"t4", "Mistral-7B-Instruct-v0.2", 109, 28, 57, 62, 0.65, 0.54, 0.66, 0.64},
        {"t4", "c4ai-command-r-v01", 92, 41, 44, 79, 0.60, 0.52, 0.68, 0.54},
        {"t4", "gemma-1.1-2b-it", 55, 78, 7, 116, 0.47, 0.52, 0.89, 0.32},
        {"t4", "Meta-Llama-3-8B-Instruct", 63, 38, 47, 108, 0.45, 0.39, 0.57, 0.37},
        // gamescreen, provided, no separator
        {"t6", "Human", 171, 85, 0, 0, 1.00, 1.00, 1.00, 1.00},
        {"t6", "Mixtral-8x7B-Instruct-v0.1", 121, 45, 40, 50, 0.73, 0.65, 0.75, 0.71},
        {"t6", "c4ai-command-r-v01", 90, 72, 13, 81, 0.66, 0.63, 0.87, 0.53},
        {"t6", "gemma-1.1-7b-it", 89, 74, 11, 82, 0.66, 0.64, 0.89, 0.52},
        {"t6", "Mistral-7B-Instruct-v0.2", 70, 83, 2, 101, 0.58, 0.60, 0.97, 0.41},
        {"t6", "Meta-Llama-3-8B-Instruct", 66, 78, 7, 105, 0.54, 0.56, 0.90, 0.39},
        {"t6", "gemma-1.1-2b-it", 74, 52, 33, 97, 0.53, 0.49, 0.69, 0.43},
        {"t6", "Meta-Llama-3-70B-Instruct", 15, 85, 0, 156, 0.16, 0.39, 1.00, 0.09},
        {"t6", "c4ai-command-r-plus", 2, 82, 3, 169, 0.02, 0.33, 0.40, 0.01},
        // cropped, provided, no separator
        {"t7", "Human", 171, 85, 0, 0, 1.00, 1.00, 1.00, 1.00},
        {"t7", "Mixtral-8x7B-Instruct-v0.1", 128, 47, 38, 43, 0.76, 0.68, 0.77, 0.75},
        {"t7", "gemma-1.1-7b-it", 128, 46, 39, 43, 0.76, 0.68, 0.77, 0.75},
        {"t7", "c4ai-command-r-v01", 115, 62, 23, 56, 0.74, 0.69, 0.83, 0.67},
        {"t7", "Meta-Llama-3-70B-Instruct", 102, 72, 13, 69, 0.71, 0.68, 0.89, 0.60},
        {"t7", "gemma-1.1-2b-it", 116, 29, 56, 55, 0.68, 0.57, 0.67, 0.68},
        {"t7", "c4ai-command-r-plus", 88, 68, 17, 83, 0.64, 0.61, 0.84, 0.51},
        {"t7", "Mistral-7B-Instruct-v0.2", 72, 84, 1, 99, 0.59, 0.61, 0.99, 0.42},
        {"t7", "Meta-Llama-3-8B-Instruct", 58, 76, 9, 113, 0.49, 0.52, 0.87, 0.34},
        // gamescreen, discovered, no separator
        {"t8", "Human", 171, 85, 0, 0, 1.00, 1.00, 1.00, 1.00},
        {"t8", "Meta-Llama-3-70B-Instruct", 157, 25, 60, 14, 0.81, 0.71, 0.72, 0.92},
        {"t8", "c4ai-command-r-plus", 125, 64, 21, 46, 0.79, 0.74, 0.86, 0.73},
        {"t8", "gemma-1.1-7b-it", 144, 17, 68, 27, 0.75, 0.63, 0.68, 0.84},
        {"t8", "Mixtral-8x7B-Instruct-v0.1", 130, 27, 58, 41, 0.72, 0.61, 0.69, 0.76},
        {"t8", "c4ai-command-r-v01", 92, 56, 29, 79, 0.63, 0.58, 0.76, 0.54},
        {"t8", "Meta-Llama-3-8B-Instruct", 70, 74, 11, 101, 0.56, 0.56, 0.86, 0.41},
        {"t8", "Mistral-7B-Instruct-v0.2", 65, 72, 13, 106, 0.52, 0.54, 0.83, 0.38},
        {"t8", "gemma-1.1-2b-it", 0, 85, 0, 171, 0.00, 0.33, 0.00, 0.00},
        // cropped, discovered, no separator
        {"t9", "Human", 171, 85, 0, 0, 1.00, 1.00, 1.00, 1.00},
        {"t9", "Meta-Llama-3-70B-Instruct", 161, 29, 56, 10, 0.83, 0.74, 0.74, 0.94},
        {"t9", "gemma-1.1-7b-it", 168, 17, 68, 3, 0.83, 0.72, 0.71, 0.98},
        {"t9", "Mixtral-8x7B-Instruct-v0.1", 146, 27, 58, 25, 0.78, 0.68, 0.72, 0.85},
        {"t9", "c4ai-command-r-plus", 121, 56, 29, 50, 0.75, 0.69, 0.81, 0.71},
        {"t9", "Meta-Llama-3-8B-Instruct", 116, 35, 50, 55, 0.69, 0.59, 0.70, 0.68},
        {"t9", "c4ai-command-r-v01", 107, 39, 46, 64, 0.66, 0.57, 0.70, 0.63},
        {"t9", "Mistral-7B-Instruct-v0.2", 80, 41, 44, 91, 0.54, 0.47, 0.65, 0.47},
        {"t9", "gemma-1.1-2b-it", 0, 85, 0, 171, 0.00, 0.33, 0.00, 0.00},
        // gamescreen, provided, with actions
        {"a1", "Human", 171, 85, 0, 0, 1.00, 1.00, 1.00, 1.00},
        {"a1", "Mixtral-8x7B-Instruct-v0.1", 132, 69, 16, 39, 0.83, 0.79, 0.89, 0.77},
        {"a1", "Mistral-7B-Instruct-v0.2", 86, 84, 1, 85, 0.67, 0.66, 0.99, 0.50},
        {"a1", "gemma-1.1-7b-it", 86, 82, 3, 85, 0.66, 0.66, 0.97, 0.50},
        {"a1", "c4ai-command-r-v01", 87, 78, 7, 84, 0.66, 0.64, 0.93, 0.51},
        {"a1", "Meta-Llama-3-8B-Instruct", 76, 83, 2, 95, 0.61, 0.62, 0.97, 0.44},
        {"a1", "Meta-Llama-3-70B-Instruct", 51, 84, 1, 120, 0.46, 0.53, 0.98, 0.30},
        {"a1", "gemma-1.1-2b-it", 0, 85, 0, 171, 0.00, 0.33, 0.00, 0.00},
        // cropped, provided, with actions
        {"a2", "Human", 171, 85, 0, 0, 1.00, 1.00, 1.00, 1.00},
        {"a2", "Mixtral-8x7B-Instruct-v0.1", 128, 64, 21, 43, 0.80, 0.75, 0.86, 0.75},
        {"a2", "gemma-1.1-7b-it", 123, 52, 33, 48, 0.75, 0.68, 0.79, 0.72},
        {"a2", "c4ai-command-r-v01", 106, 68, 17, 65, 0.72, 0.68, 0.86, 0.62},
        {"a2", "gemma-1.1-2b-it", 118, 42, 43, 53, 0.71, 0.62, 0.73, 0.69},
        {"a2", "Mistral-7B-Instruct-v0.2", 86, 83, 2, 85, 0.66, 0.66, 0.98, 0.50},
        {"a2", "Meta-Llama-3-70B-Instruct", 92, 59, 26, 79, 0.64, 0.59, 0.78, 0.54},
        {"a2", "Meta-Llama-3-8B-Instruct", 60, 78, 7, 111, 0.50, 0.54, 0.90, 0.35},
        // gamescreen, discovered, with actions
        {"a3", "Human", 171, 85, 0, 0, 1.00, 1.00, 1.00, 1.00},
        {"a3", "Meta-Llama-3-70B-Instruct", 155, 46, 39, 16, 0.85, 0.79, 0.80, 0.91},
        {"a3", "Mixtral-8x7B-Instruct-v0.1", 147, 29, 56, 24, 0.79, 0.69, 0.72, 0.86},
        {"a3", "Meta-Llama-3-8B-Instruct", 155, 13, 72, 16, 0.78, 0.66, 0.68, 0.91},
        {"a3", "gemma-1.1-7b-it", 141, 22, 63, 30, 0.75, 0.64, 0.69, 0.82},
        {"a3", "Mistral-7B-Instruct-v0.2", 122, 33, 52, 49, 0.71, 0.61, 0.70, 0.71},
        {"a3", "c4ai-command-r-v01", 102, 69, 16, 69, 0.71, 0.67, 0.86, 0.60},
        {"a3", "gemma-1.1-2b-it", 0, 85, 0, 171, 0.00, 0.33, 0.00, 0.00},
        // cropped, discovered, with actions
        {"a4", "Human", 171, 85, 0, 0, 1.00, 1.00, 1.00, 1.00},
        {"a4", "Meta-Llama-3-70B-Instruct", 155, 50, 35, 16, 0.86, 0.80, 0.82, 0.91},
        {"a4", "Mixtral-8x7B-Instruct-v0.1", 156, 35, 50, 15, 0.83, 0.75, 0.76, 0.91},
        {"a4", "gemma-1.1-7b-it", 158, 27, 58, 13, 0.82, 0.72, 0.73, 0.92},
        {"a4", "c4ai-command-r-v01", 130, 35, 50, 41, 0.74, 0.64, 0.72, 0.76},
        {"a4", "Mistral-7B-Instruct-v0.2", 120, 42, 43, 51, 0.72, 0.63, 0.74, 0.70},
        {"a4", "Meta-Llama-3-8B-Instruct", 79, 39, 46, 92, 0.53, 0.46, 0.63, 0.46},
        {"a4", "gemma-1.1-2b-it", 48, 75, 10, 123, 0.42, 0.48, 0.83, 0.28},
    };
    return rows;
}

}  // namespace testsupport
