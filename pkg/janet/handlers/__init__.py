from janet.handlers.decompose_handler import DecomposeHandler, decompose
from janet.handlers.partition_handler import PartitionHandler, partition
from janet.handlers.verify_handler    import VerifyHandler
from janet.handlers.info_handler      import InfoHandler
from janet.handlers.demo_handler      import DemoHandler
from janet.handlers.selftest_handler  import SelftestHandler
