#pragma once

#include "hankel/config.hpp"
#include "hankel/convolution.hpp"
#include "hankel/errors.hpp"
#include "hankel/generating_vector.hpp"
#include "hankel/gram.hpp"
#include "hankel/json_io.hpp"
#include "hankel/linalg.hpp"
#include "hankel/multi_index.hpp"
#include "hankel/psd.hpp"
#include "hankel/rng.hpp"
#include "hankel/sampling.hpp"
#include "hankel/sos.hpp"
#include "hankel/tensor.hpp"
#include "hankel/vandermonde.hpp"
