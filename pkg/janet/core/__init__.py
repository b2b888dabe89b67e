from janet.core.decompose       import janet_ideal, janet_complement
from janet.core.decompose       import assemble_levels
from janet.core.partition       import janet_partition, janet_partition_trace
from janet.core.partition       import PartitionTrace
from janet.core.stanley_reisner import stanley_reisner, partition_to_spaces
from janet.core.stanley_reisner import minimal_nonfaces
