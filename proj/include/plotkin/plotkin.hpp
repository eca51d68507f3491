#pragma once

#include "plotkin/binary_word.hpp"
#include "plotkin/catalog.hpp"
#include "plotkin/channel.hpp"
#include "plotkin/decoder_spec.hpp"
#include "plotkin/double_plotkin.hpp"
#include "plotkin/galois_bch.hpp"
#include "plotkin/leaf_decoders.hpp"
#include "plotkin/linear_code.hpp"
#include "plotkin/list_decoders.hpp"
#include "plotkin/ml_table.hpp"
#include "plotkin/op_counter.hpp"
#include "plotkin/rng.hpp"
#include "plotkin/sim.hpp"
#include "plotkin/soft_ops.hpp"
#include "plotkin/variants.hpp"
