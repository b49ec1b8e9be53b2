#pragma once

// Umbrella header for the whole library.

#include "lefschetz/cl_pipeline.hpp"
#include "lefschetz/conditions.hpp"
#include "lefschetz/csm.hpp"
#include "lefschetz/exact_matrix.hpp"
#include "lefschetz/hilbert_series.hpp"
#include "lefschetz/lefschetz_check.hpp"
#include "lefschetz/lgv.hpp"
#include "lefschetz/monomial.hpp"
#include "lefschetz/monomial_ideal.hpp"
#include "lefschetz/parse.hpp"
#include "lefschetz/quotient_module.hpp"
#include "lefschetz/series_shape.hpp"
#include "lefschetz/sweep.hpp"
