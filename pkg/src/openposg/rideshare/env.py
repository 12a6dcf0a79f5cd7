"""Rideshare environment dynamics."""
from __future__ import annotations

from ..core.actions import NOOP, Action, JointAction
from ..core.environment import Environment, Event
from ..core.rng import RngStream
from .structures import (
    ACCEPTED,
    DROPPED_OFF,
    PICKED_UP,
    UNACCEPTED,
    Driver,
    DriverGlimpse,
    PassengerTask,
    RideshareConfig,
    RideshareObservation,
    RideshareState,
    manhattan,
)


class RideshareEnv(Environment):
    domain = "rideshare"

    def reset(self, config: RideshareConfig, seed: int) -> tuple[RideshareState, dict[str, RideshareObservation]]:
        config.validate()
        drivers = tuple(
            Driver(f"driver_{i}", spec.position, 0, 0, spec.accept_cap, spec.ride_cap)
            for i, spec in enumerate(config.drivers)
        )
        tasks = tuple(
            PassengerTask(
                id=i,
                position=spec.position,
                destination=spec.destination,
                fare=float(manhattan(spec.position, spec.destination)),
                t_entered=0,
            )
            for i, spec in enumerate(config.initial_tasks)
        )
        state = RideshareState(t=0, seed=seed, config=config, drivers=drivers, tasks=tasks, next_task_id=len(tasks))
        return state, self.observe(state, {})

    def roster(self, state: RideshareState) -> tuple[str, ...]:
        return tuple(d.agent for d in state.drivers)

    def present_agents(self, state: RideshareState) -> tuple[str, ...]:
        return self.roster(state)  # no agent openness in this domain

    def legal_actions(self, state: RideshareState, agent: str) -> tuple[Action, ...]:
        me = self._driver(state, agent)
        accepts, picks, drops = [], [], []
        for task in state.tasks:
            if task.lifecycle == UNACCEPTED and me.accepted_count < me.accept_cap:
                accepts.append(Action("accept", task.id))
            elif task.lifecycle == ACCEPTED and task.assigned_driver == agent:
                if me.position == task.position and me.riding_count < me.ride_cap:
                    picks.append(Action("pick", task.id))
            elif task.lifecycle == PICKED_UP and task.assigned_driver == agent:
                if me.position == task.destination:
                    drops.append(Action("drop", task.id))
        return (NOOP, *accepts, *picks, *drops)

    def transition(self, state: RideshareState, actions: JointAction, rng: RngStream) -> tuple[RideshareState, list[Event]]:
        config = state.config
        events: list[Event] = []
        tasks = {task.id: task for task in state.tasks}
        drivers = {d.agent: d for d in state.drivers}

        # Phase 1: lifecycle transitions.  Drivers are processed in roster
        # order; when two accept the same task the earlier driver wins and
        # the loser's action degrades to a noop.
        for driver in state.drivers:
            action = actions.get(driver.agent, NOOP)
            me = drivers[driver.agent]
            if action.kind == "accept":
                task = tasks[action.target]
                if task.lifecycle != UNACCEPTED:
                    events.append({"kind": "accept-conflict", "driver": driver.agent, "task": task.id})
                    continue
                tasks[task.id] = PassengerTask(
                    task.id, task.position, task.destination, task.fare,
                    ACCEPTED, driver.agent, task.t_entered, state.t, None,
                )
                drivers[driver.agent] = Driver(
                    me.agent, me.position, me.accepted_count + 1, me.riding_count, me.accept_cap, me.ride_cap
                )
                events.append({"kind": "accept", "driver": driver.agent, "task": task.id})
            elif action.kind == "pick":
                task = tasks[action.target]
                tasks[task.id] = PassengerTask(
                    task.id, task.position, task.destination, task.fare,
                    PICKED_UP, driver.agent, task.t_entered, task.t_accepted, state.t,
                )
                drivers[driver.agent] = Driver(
                    me.agent, me.position, me.accepted_count - 1, me.riding_count + 1, me.accept_cap, me.ride_cap
                )
                events.append({"kind": "pickup", "driver": driver.agent, "task": task.id})
            elif action.kind == "drop":
                task = tasks[action.target]
                tasks[task.id] = PassengerTask(
                    task.id, task.position, task.destination, task.fare,
                    DROPPED_OFF, driver.agent, task.t_entered, task.t_accepted, task.t_picked,
                )
                drivers[driver.agent] = Driver(
                    me.agent, me.position, me.accepted_count, me.riding_count - 1, me.accept_cap, me.ride_cap
                )
                events.append({"kind": "dropoff", "driver": driver.agent, "task": task.id, "fare": task.fare})

        # Phase 2: movement.  Each driver advances one Manhattan step toward
        # its focus target (oldest picked-up task's destination, else oldest
        # accepted task's position), vertical distance first.  Riding
        # passengers move with the driver.
        for name, driver in drivers.items():
            target = self._focus_target(tasks.values(), name)
            if target is None or driver.position == target:
                continue
            y, x = driver.position
            ty, tx = target
            if y != ty:
                y += 1 if ty > y else -1
            elif x != tx:
                x += 1 if tx > x else -1
            drivers[name] = Driver(name, (y, x), driver.accepted_count, driver.riding_count,
                                   driver.accept_cap, driver.ride_cap)
            events.append({"kind": "moved", "driver": name, "to": [y, x]})
            for task in tasks.values():
                if task.lifecycle == PICKED_UP and task.assigned_driver == name:
                    tasks[task.id] = PassengerTask(
                        task.id, (y, x), task.destination, task.fare,
                        PICKED_UP, name, task.t_entered, task.t_accepted, task.t_picked,
                    )

        # Phase 3: arrivals.  At most one new passenger per step, only while
        # the number of open (unaccepted) tasks is below the cap.  The fare is
        # frozen at spawn as the Manhattan entry-to-destination distance.
        next_task_id = state.next_task_id
        open_count = sum(1 for task in tasks.values() if task.lifecycle == UNACCEPTED)
        arrival_rng = rng.substream("arrivals", state.t)
        if open_count < config.max_open_tasks and arrival_rng.random() < config.p_arrival:
            cells = config.grid_height * config.grid_width
            pos_index = arrival_rng.randrange(cells)
            dest_index = arrival_rng.randrange(cells - 1)
            if dest_index >= pos_index:
                dest_index += 1
            position = divmod(pos_index, config.grid_width)
            destination = divmod(dest_index, config.grid_width)
            fare = float(manhattan(position, destination))
            tasks[next_task_id] = PassengerTask(
                next_task_id, position, destination, fare, UNACCEPTED, None, state.t, None, None
            )
            events.append(
                {
                    "kind": "arrival",
                    "task": next_task_id,
                    "position": list(position),
                    "destination": list(destination),
                    "fare": fare,
                }
            )
            next_task_id += 1

        next_state = RideshareState(
            t=state.t + 1,
            seed=state.seed,
            config=config,
            drivers=tuple(drivers[d.agent] for d in state.drivers),
            tasks=tuple(tasks[tid] for tid in sorted(tasks)),
            next_task_id=next_task_id,
        )
        return next_state, events

    def reward(self, next_state: RideshareState, events: list[Event]) -> dict[str, float]:
        """Each driver earns the fares of its own completed trips this step;
        the waiting penalty for unaccepted passengers hits every driver."""
        config = next_state.config
        waiting = sum(1 for task in next_state.tasks if task.lifecycle == UNACCEPTED)
        if config.penalize_accepted:
            waiting += sum(1 for task in next_state.tasks if task.lifecycle == ACCEPTED)
        penalty = config.waiting_penalty * waiting
        rewards = {d.agent: penalty for d in next_state.drivers}
        for ev in events:
            if ev["kind"] == "dropoff":
                rewards[ev["driver"]] += ev["fare"]
        return rewards

    def observe(self, state: RideshareState, actions: JointAction) -> dict[str, RideshareObservation]:
        observations = {}
        for driver in state.drivers:
            visible = tuple(
                task
                for task in state.tasks
                if task.lifecycle == UNACCEPTED
                or (task.assigned_driver == driver.agent and task.lifecycle != DROPPED_OFF)
            )
            others = tuple(
                DriverGlimpse(other.agent, other.position, other.accepted_count, other.riding_count)
                for other in state.drivers
                if other.agent != driver.agent
            )
            observations[driver.agent] = RideshareObservation(
                agent=driver.agent,
                me=driver,
                others=others,
                tasks=visible,
                legal_actions=self.legal_actions(state, driver.agent),
            )
        return observations

    def is_terminal(self, state: RideshareState) -> bool:
        return False  # runs to the configured horizon

    def _driver(self, state: RideshareState, agent: str) -> Driver:
        for d in state.drivers:
            if d.agent == agent:
                return d
        raise KeyError(f"unknown agent {agent!r}")

    @staticmethod
    def _focus_target(tasks, driver: str) -> tuple[int, int] | None:
        riding = [t for t in tasks if t.lifecycle == PICKED_UP and t.assigned_driver == driver]
        if riding:
            oldest = min(riding, key=lambda t: (t.t_picked, t.id))
            return oldest.destination
        accepted = [t for t in tasks if t.lifecycle == ACCEPTED and t.assigned_driver == driver]
        if accepted:
            oldest = min(accepted, key=lambda t: (t.t_accepted, t.id))
            return oldest.position
        return None
