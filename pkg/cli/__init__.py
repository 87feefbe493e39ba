"""Instance files, property suites and the command-line entry point."""

from cli.instance_file import InstanceFile, instance_to_json, load_instance, parse_data, parse_instance
from cli.instance_file import serialize_instance
from cli.output import render
from cli.runner import exact_dist, policies_of, run_instance
from cli.suites import SUITES, PropertyTally, SuiteOptions, load_suite_config, run_suite
