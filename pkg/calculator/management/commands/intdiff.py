import argparse

from django.core.management.base import BaseCommand, CommandError

from calculator.runner import run_command


class Command(BaseCommand):
    help = 'Exact integro-differential operator calculator (norm, mul, apply, grade, inF, b1, oracle, mod, selftest)'

    def add_arguments(self, parser):
        parser.add_argument('argv', nargs=argparse.REMAINDER, help='subcommand and its arguments')

    def handle(self, *args, **options):
        code, report = run_command(options['argv'])
        self.stdout.write(report)
        if code:
            raise CommandError(f'intdiff exited with status {code}', returncode=code)
