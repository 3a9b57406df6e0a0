#pragma once

#include "qukit/coherent.hpp"
#include "qukit/entanglement.hpp"
#include "qukit/errors.hpp"
#include "qukit/io.hpp"
#include "qukit/operators.hpp"
#include "qukit/sampling.hpp"
#include "qukit/symmetric_subspace.hpp"
#include "qukit/tensor_core.hpp"
#include "qukit/verify.hpp"
